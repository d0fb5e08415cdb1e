HSEQd      �6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?�6���I?��M�ü.���M�ü.���M�ü.���M�ü.���M�ü.���M�ü.���M�ü.���M�ü.���M�ü.���M�ü.���M�ü.���M�ü.���M�ü.���M�ü.�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�)�j?�Q�h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?h;?���?