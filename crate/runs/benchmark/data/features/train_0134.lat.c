HSEQd      �M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?�M?��?A���d?A���d?A���d?A���d?A���d?A���d?A���d?A���d?A���d?A���d?��7�+���7�+���7�+���7�+���7�+���7�+���7�+���7�+���7�+���7�+�,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��,)?�?��