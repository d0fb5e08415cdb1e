HSEQd      �E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�E?�G	?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�-˾�Q?�1k�/�1k�/�1k�/�1k�/�1k�/�1k�/�1k�/�1k�/�1k�/�1k�/�1k�/�1k�/�1k�/�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�m�>=�`�