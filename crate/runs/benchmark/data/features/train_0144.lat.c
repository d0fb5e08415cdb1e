HSEQd      ��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?��	��@'?�4����4����4����4����4����4����4����4����4����4����4����ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��ҽ>��(��1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>�1X?�8�>