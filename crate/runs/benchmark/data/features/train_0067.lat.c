HSEQd      M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?M��`�W?��`�,T���`�,T���`�,T���`�,T���`�,T���`�,T���`�,T���`�,T���`�,T���`�,T��?Q�O��?Q�O��?Q�O��?Q�O��?Q�O��?Q�O��?Q�O��?Q�O��?Q�O��?Q�O��b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?�b?ZC?