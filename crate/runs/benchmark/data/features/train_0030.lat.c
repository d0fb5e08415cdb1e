HSEQd      �k?��P��k?��P��k?��P��k?��P��k?��P��k?��P��k?��P��k?��P��k?��P��k?��P��k?��P��k?��P��k?��P��k?��P��(�?\8?�(�?\8?�(�?\8?�(�?\8?�(�?\8?�(�?\8?�(�?\8?�(�?\8?�(�?\8?�(�?\8?�(�?\8?�(�?\8?�(�?\8?���L�?���L�?���L�?���L�?���L�?���L�?���L�?���L�?���L�?���L�?���L�?���L�?���L�?���L�?���L�?[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�[��t�%�