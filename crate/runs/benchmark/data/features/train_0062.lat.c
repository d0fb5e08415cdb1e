HSEQd      4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?4�M?�M1?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?H�$�CI?�_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1��_l��1���I?��\���I?��\���I?��\���I?��\���I?��\���I?��\���I?��\���I?��\���I?��\���I?��\���I?��\�