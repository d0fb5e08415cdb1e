HSEQd      �E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?�E?�6&?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?��.�n=T?I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�I�t���D�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�U�=?S(`�