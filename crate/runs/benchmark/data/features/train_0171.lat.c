HSEQd      ��8��^?��8��^?��8��^?��8��^?��8��^?��8��^?��8��^?��8��^?��8��^?��8��^?��8��^?��8��^?��Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?���Z�~�?�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g�J
4?�:g���~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?��~?&&,?