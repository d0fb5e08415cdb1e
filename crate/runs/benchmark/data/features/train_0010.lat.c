HSEQd      v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?v'A��Bu?��X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N���X�� N�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q�K�<?�?q��yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?�yq?�<?