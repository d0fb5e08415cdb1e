HSEQd      �$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?�$�([?*J?�tc�*J?�tc�*J?�tc�*J?�tc�*J?�tc�*J?�tc�*J?�tc�*J?�tc�*J?�tc�*J?�tc�*J?�tc�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA�ο?�wA���$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?��$?U7?