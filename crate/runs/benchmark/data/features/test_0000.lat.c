HSEQd      1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�1%?>G�Ku`?5R�>Ku`?5R�>Ku`?5R�>Ku`?5R�>Ku`?5R�>Ku`?5R�>Ku`?5R�>Ku`?5R�>Ku`?5R�>Ku`?5R�>Ku`?5R�>Ku`?5R�>�Q��|H?�Q��|H?�Q��|H?�Q��|H?�Q��|H?�Q��|H?�Q��|H?�Q��|H?�Q��|H?�Q��|H?�Q��|H?~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�~/F��?�