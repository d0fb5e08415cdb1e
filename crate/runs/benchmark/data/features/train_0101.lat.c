HSEQd      �C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`��C?0s`�jym?G?jym?G?jym?G?jym?G?jym?G?jym?G?jym?G?jym?G?jym?G?jym?G?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?z�����?����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�����&�"�