HSEQd      CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?CS����K?��-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���-��'���D?�B���D?�B���D?�B���D?�B���D?�B���D?�B���D?�B���D?�B���D?�B���D?�B���D?�B���D?�B���D?�B�b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?b,
?�HR?