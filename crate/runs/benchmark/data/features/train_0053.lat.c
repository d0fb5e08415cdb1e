HSEQd      L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?L$��	9?��-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C���-�y#C�W�2?O��W�2?O��W�2?O��W�2?O��W�2?O��W�2?O��W�2?O��W�2?O��W�2?O��W�2?O��W�2?O��W�2?O��%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?%?�M?