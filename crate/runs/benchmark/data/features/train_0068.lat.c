HSEQd      ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$�ufq�'�$����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j����>�<j���|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?��|?�?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?߯��Y?