HSEQd      m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k�m�?k��.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?�.T?[�?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?ie��s,9?�[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\���[K�\��