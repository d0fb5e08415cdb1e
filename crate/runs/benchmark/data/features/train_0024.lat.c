HSEQd      E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+�E??�v+��uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?�uY?JJ]?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?1mW�x�R?N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�N�;��a�