HSEQd      ��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��X?�)#?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?��t�e?�wa���wa���wa���wa���wa���wa���wa���wa���wa���wa���~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M��~�>>�M�