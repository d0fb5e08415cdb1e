HSEQd      c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O�c_?�O��K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�K?��?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?�/ܾ�,\?��f�o.۾��f�o.۾��f�o.۾��f�o.۾��f�o.۾��f�o.۾��f�o.۾��f�o.۾��f�o.۾��f�o.۾