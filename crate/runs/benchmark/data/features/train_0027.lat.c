HSEQd      �2��5��2��5��2��5��2��5��2��5��2��5��2��5��2��5��2��5��2��5��2��5�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"�3�Z?#!"���>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?��>�=?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?!�=�U~	?