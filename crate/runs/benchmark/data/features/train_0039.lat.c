HSEQd      {��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G�{��>��G���? zP>��? zP>��? zP>��? zP>��? zP>��? zP>��? zP>��? zP>��? zP>��? zP>��? zP>V���V�>V���V�>V���V�>V���V�>V���V�>V���V�>V���V�>V���V�>V���V�>V���V�>V���V�>����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�