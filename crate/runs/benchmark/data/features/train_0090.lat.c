HSEQd      �(?:�?�(?:�?�(?:�?�(?:�?�(?:�?�(?:�?�(?:�?�(?:�?�(?:�?�(?:�?�(?:�?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?��\E7?�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վ�K�B�վh/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�h/�>|1N�