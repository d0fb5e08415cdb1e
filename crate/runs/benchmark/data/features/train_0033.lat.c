HSEQd      ��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?��.��a?W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�W�~���5�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�P+?B�z�OQ�?�ZQ?OQ�?�ZQ?OQ�?�ZQ?OQ�?�ZQ?OQ�?�ZQ?OQ�?�ZQ?OQ�?�ZQ?OQ�?�ZQ?OQ�?�ZQ?OQ�?�ZQ?