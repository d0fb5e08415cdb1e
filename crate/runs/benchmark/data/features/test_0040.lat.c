HSEQd      �=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�=��J?�~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���~Z���#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��#�>�Q��7?&�>�7?&�>�7?&�>�7?&�>�7?&�>�7?&�>�7?&�>�7?&�>�7?&�>�7?&�>