HSEQd      @��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?@��g�P?�=�����=�����=�����=�����=�����=�����=�����=�����=�����=�����=�����=�����=�����=�����=�����?!�[��?!�[��?!�[��?!�[��?!�[��?!�[��?!�[��?!�[��?!�[��?!�[�u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>u�q?��>