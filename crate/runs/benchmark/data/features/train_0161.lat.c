HSEQd      �?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��?�;f��ne?5�>�ne?5�>�ne?5�>�ne?5�>�ne?5�>�ne?5�>�ne?5�>�ne?5�>�ne?5�>�ne?5�>�ne?5�>�ne?5�>�ne?5�>F�����z?F�����z?F�����z?F�����z?F�����z?F�����z?F�����z?F�����z?F�����z?F�����z?F�����z?F�����z?_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž_ㄿ�:ž