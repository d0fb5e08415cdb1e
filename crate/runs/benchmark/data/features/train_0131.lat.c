HSEQd      �O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u��O?��u���z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?��z?t[l?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?�Dj���}?3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��3�~��1��