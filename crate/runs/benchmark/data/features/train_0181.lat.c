HSEQd      �
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�
�d(E?�X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~��X��~�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK�c4#?mpK���^?4?��^?4?��^?4?��^?4?��^?4?��^?4?��^?4?��^?4?��^?4?��^?4?