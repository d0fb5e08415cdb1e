HSEQd      �B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?�B��/(?B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�B���f�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>�}�L?�>����>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?���>�vY?