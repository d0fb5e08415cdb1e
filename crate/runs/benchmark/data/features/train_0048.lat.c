HSEQd      X/c���X/c���X/c���X/c���X/c���X/c���X/c���X/c���X/c���X/c���X/c���X/c���X/c���X/c���X/c���X/c���(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk�(?�rk���a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��a?@�1?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?��(��oW?