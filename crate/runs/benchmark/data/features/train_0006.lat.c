HSEQd      5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?5�/�2?|�6��MH�|�6��MH�|�6��MH�|�6��MH�|�6��MH�|�6��MH�|�6��MH�|�6��MH�|�6��MH�|�6��MH�|�6��MH��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��[M?�_7��T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?�T;?FO?