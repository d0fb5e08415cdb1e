HSEQd      ~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?~u��?a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�����a>�������>1���>1���>1���>1���>1���>1���>1���>1���>1���>1���>1���>1���>1�6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>6��?�>