HSEQd      ��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��V�
�=?��5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~���5��5~�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H�(�?�5H��A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?�A[?��n?