HSEQd      E�
?�&`�E�
?�&`�E�
?�&`�E�
?�&`�E�
?�&`�E�
?�&`�E�
?�&`�E�
?�&`�E�
?�&`�E�
?�&`�E�
?�&`�E�
?�&`�kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?kB?v/?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?�I
�X�T?'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�'�o�A"�