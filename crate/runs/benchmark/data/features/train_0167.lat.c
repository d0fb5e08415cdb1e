HSEQd      |f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?|f<?/4>?��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>��=�J��>X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�X�-���D�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�u0C?��.�