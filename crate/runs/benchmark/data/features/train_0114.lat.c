HSEQd      U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�U�M?��Q�rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?rc?n�|?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B?������B??�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����?�J����