HSEQd      ��6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<���6�A<�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T�V�
?�T��{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>�{?5��>���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?���`�?