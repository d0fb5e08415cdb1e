HSEQd      n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�n:S��)�X�?��O�X�?��O�X�?��O�X�?��O�X�?��O�X�?��O�X�?��O�X�?��O�X�?��O�X�?��O�X�?��O�X�?��O��Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?�Z=?�-)?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?< ��,L?