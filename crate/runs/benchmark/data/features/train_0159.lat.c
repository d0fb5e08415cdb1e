HSEQd      Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Hh��l
�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w�Z��>w󒿽��?R?���?R?���?R?���?R?���?R?���?R?���?R?���?R?���?R?���?R?���?R?���?R?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?���2l�?