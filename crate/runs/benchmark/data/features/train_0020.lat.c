HSEQd       "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p�� "d�p���-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H��-?�H�[]?Z1?[]?Z1?[]?Z1?[]?Z1?[]?Z1?[]?Z1?[]?Z1?[]?Z1?[]?Z1?[]?Z1?[]?Z1?[]?Z1?[]?Z1?�\�o�V?�\�o�V?�\�o�V?�\�o�V?�\�o�V?�\�o�V?�\�o�V?�\�o�V?�\�o�V?�\�o�V?�\�o�V?