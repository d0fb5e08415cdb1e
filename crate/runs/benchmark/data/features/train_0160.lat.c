HSEQd      ��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��a?k3?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?��
XV?�0�E���0�E���0�E���0�E���0�E���0�E���0�E���0�E���0�E���0�E���0�E���0�E���0�E���0�E����?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^���?�}^�