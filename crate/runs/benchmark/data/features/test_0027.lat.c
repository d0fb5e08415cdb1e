HSEQd      �?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q��?��Q�+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?+ZM?T)?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?n�ѾBJ?v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��v�w�7��