HSEQd      >`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q�>`G?}q����??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?���??�6?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?f�H�g�?�I����2��I����2��I����2��I����2��I����2��I����2��I����2��I����2��I����2��I����2��I����2��I����2��I����2��I����2��I����2�