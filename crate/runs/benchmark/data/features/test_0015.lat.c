HSEQd      �����S?�����S?�����S?�����S?�����S?�����S?�����S?�����S?�����S?�����S?�����S?�����S?�����S?�����S?�����S?��_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os���_�Os��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`��9?��`�8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?8��?#"?