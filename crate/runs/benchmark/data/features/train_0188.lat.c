HSEQd      ��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?��T�^?�8�x���8�x���8�x���8�x���8�x���8�x���8�x���8�x���8�x���8�x��3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�3��>_�A�T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>T	e?�7�>