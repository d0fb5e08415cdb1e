HSEQd      �8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�8'��->?�K��?O��K��?O��K��?O��K��?O��K��?O��K��?O��K��?O��K��?O��K��?O��K��?O��K��?O��K��?O�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�sAF?>B�9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?9�!?XIJ?