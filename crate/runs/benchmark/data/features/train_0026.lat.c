HSEQd      "�?�[�"�?�[�"�?�[�"�?�[�"�?�[�"�?�[�"�?�[�"�?�[�"�?�[�"�?�[�"�?�[�"�?�[��6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?�6�?�;?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?9���,ɕ?�j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	����j��	���