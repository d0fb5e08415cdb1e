HSEQd      �p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?�p�ϔ+?A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"�A&2�>�"���?�]G���?�]G���?�]G���?�]G���?�]G���?�]G���?�]G���?�]G���?�]G���?�]G���?�]G���?�]G�Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?Jj/?�5?