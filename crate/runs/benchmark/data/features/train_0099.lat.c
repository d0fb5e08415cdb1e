HSEQd      �*��,?�*��,?�*��,?�*��,?�*��,?�*��,?�*��,?�*��,?�*��,?�*��,?�*��,?��e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b���e���b�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�K�x?�_J�܈=?�L�?܈=?�L�?܈=?�L�?܈=?�L�?܈=?�L�?܈=?�L�?܈=?�L�?܈=?�L�?܈=?�L�?܈=?�L�?܈=?�L�?܈=?�L�?