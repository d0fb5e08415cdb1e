HSEQd      9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?9���?��7�WV����7�WV����7�WV����7�WV����7�WV����7�WV����7�WV����7�WV����7�WV����7�WV����7�WV��#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7�#�>��7���D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>��D?��w>