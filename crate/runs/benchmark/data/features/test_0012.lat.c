HSEQd      �QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<��QN�<�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�	�?٠%�Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?Ig?�h4?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?ڳH�=�k?