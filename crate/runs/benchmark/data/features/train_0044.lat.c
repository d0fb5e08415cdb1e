HSEQd      ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ��&�dCӾ#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� �#��>� ��7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>�7?��m>e�\��S:?e�\��S:?e�\��S:?e�\��S:?e�\��S:?e�\��S:?e�\��S:?e�\��S:?e�\��S:?e�\��S:?e�\��S:?