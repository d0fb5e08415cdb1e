HSEQd      �� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?�� �M#;?��Z������Z������Z������Z������Z������Z������Z������Z������Z������Z������Z������Z������Z������Z������Z������Z������Z������Z������Z�����;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@��;+?
�@���i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?��i?9�,?