HSEQd      zHZ?��?zHZ?��?zHZ?��?zHZ?��?zHZ?��?zHZ?��?zHZ?��?zHZ?��?zHZ?��?zHZ?��?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?�	�n&U?:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=���:�=������>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k����>�*k�