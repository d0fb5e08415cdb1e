HSEQd      ��N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���N?�cU���?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?��?��L?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?�!�f�x?!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��!j�Y��