HSEQd      ͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ�͔'?nTJ��7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?�7F?�-?*��Aj?*��Aj?*��Aj?*��Aj?*��Aj?*��Aj?*��Aj?*��Aj?*��Aj?*��Aj?*��Aj?*��Aj?�$x�����$x�����$x�����$x�����$x�����$x�����$x�����$x�����$x�����$x�����$x����