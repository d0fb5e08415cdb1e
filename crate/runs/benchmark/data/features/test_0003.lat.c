HSEQd      ��R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f���R?�f�v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?v0k?7�]?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�e�zZ?�p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z��p?�^:Z�