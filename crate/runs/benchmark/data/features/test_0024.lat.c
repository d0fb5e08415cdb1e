HSEQd      � 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�� 3?�+8�G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?G�0?�+K?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?��5�X�j?�Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B��Fs�d?B�