HSEQd      �?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn��?�qn�_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>_�?|\�>�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�پE+z?�hp�����hp�����hp�����hp�����hp�����hp�����hp�����hp�����hp�����hp����