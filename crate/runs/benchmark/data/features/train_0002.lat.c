HSEQd      ��H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H���d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�d�>�P�h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>h�Z?�Z�>xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?xo����J?