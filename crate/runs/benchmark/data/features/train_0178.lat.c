HSEQd      ���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?���<�3?��2������2������2������2������2������2������2������2������2������2������2������2������2������2������2������2������2������2������2������2������2������2������2������2����X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�X�?��)�DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?DP?�x?