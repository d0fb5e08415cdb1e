HSEQd      tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?tP*�:�#?��=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���=�/�Y���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I���u?�,I� I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙? I?�֙?