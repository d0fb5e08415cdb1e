HSEQd      ��M�NE���M�NE���M�NE���M�NE���M�NE���M�NE���M�NE���M�NE���M�NE���M�NE���M�NE���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F���?P(F�6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>6�@?���>� �y�:?� �y�:?� �y�:?� �y�:?� �y�:?� �y�:?� �y�:?� �y�:?� �y�:?� �y�:?� �y�:?� �y�:?