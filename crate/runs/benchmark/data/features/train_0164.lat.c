HSEQd      g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T�g��>�T��@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�@?�Q�>�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�I��=?�HS��G��HS��G��HS��G��HS��G��HS��G��HS��G��HS��G��HS��G��HS��G��HS��G�