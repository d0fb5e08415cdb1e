HSEQd      �5l?�%?�5l?�%?�5l?�%?�5l?�%?�5l?�%?�5l?�%?�5l?�%?�5l?�%?�5l?�%?�5l?�%?�5l?�%?�5l?�%?�5l?�%?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?����B{?Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾Ic�o�۾�Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a��Z�>]@a�