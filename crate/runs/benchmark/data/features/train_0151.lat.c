HSEQd      �+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
��+~�&�
�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�XE.?�iw�F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?F�h?J�`?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?^(F���l?