HSEQd      ��@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q���@?�Q��AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�AY?]F2?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?�T���H?A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�A,b�F�U�