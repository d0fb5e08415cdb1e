HSEQd      ��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?��L?Y20?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?,@+�u+D?:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�:iA�;�#�7J?�:P�7J?�:P�7J?�:P�7J?�:P�7J?�:P�7J?�:P�7J?�:P�7J?�:P�7J?�:P�7J?�:P�7J?�:P�7J?�:P�7J?�:P�