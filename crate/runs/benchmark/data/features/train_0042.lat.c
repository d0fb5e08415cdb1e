HSEQd      ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r�ң>��r��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P��2�>�)P�BA?�	?BA?�	?BA?�	?BA?�	?BA?�	?BA?�	?BA?�	?BA?�	?BA?�	?BA?�	?BA?�	?BA?�	?BA?�	?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?T7��+?