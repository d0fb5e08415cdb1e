HSEQd      �H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�H?Hq�>�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?�ؾ�#e?<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��<h�~R��g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�g��>��:�