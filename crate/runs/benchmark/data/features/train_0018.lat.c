HSEQd      ��5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.���5�G�.� �3?�Y.� �3?�Y.� �3?�Y.� �3?�Y.� �3?�Y.� �3?�Y.� �3?�Y.� �3?�Y.� �3?�Y.� �3?�Y.� �3?�Y.��9?�2?�9?�2?�9?�2?�9?�2?�9?�2?�9?�2?�9?�2?�9?�2?�9?�2?�9?�2?�9?�2?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?��)�O�I?