HSEQd      �Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?�Yh?tJ?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?��ھ��A?�@�H��@�H��@�H��@�H��@�H��@�H��@�H��@�H��@�H��@�H��@�H��@�H��@�H��@�H��@�H��@�H�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�,S?ϮK�