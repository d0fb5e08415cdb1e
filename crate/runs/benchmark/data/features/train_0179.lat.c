HSEQd      �4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_��4?�_�cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?cm?�+8?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?P@f�a�F?��2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|���2��|�