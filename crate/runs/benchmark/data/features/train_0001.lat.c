HSEQd      ��?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>���?��>��H]?�'2?�H]?�'2?�H]?�'2?�H]?�'2?�H]?�'2?�H]?�'2?�H]?�'2?�H]?�'2?�H]?�'2?�H]?�'2?�H]?�'2?�H]?�'2?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Y��tP?�Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)��Jn�T)�