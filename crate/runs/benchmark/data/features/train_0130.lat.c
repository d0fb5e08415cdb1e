HSEQd      r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?r�>���?����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`�����d�`��v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[���v?[����?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?��?�6h?