HSEQd      �e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T��e?�T�ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?ba?g�!?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�-��c�?�����N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N������N�