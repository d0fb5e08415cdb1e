HSEQd      �=?/k?�=?/k?�=?/k?�=?/k?�=?/k?�=?/k?�=?/k?�=?/k?�=?/k?�=?/k?�=?/k?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?^�c�a?
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�
�}�b�}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��}�>΄��