HSEQd      �G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6��G�5�6�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD�d�L?�XD��\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�\?Xb?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?�@��?T?