HSEQd      o�=?bt1?o�=?bt1?o�=?bt1?o�=?bt1?o�=?bt1?o�=?bt1?o�=?bt1?o�=?bt1?o�=?bt1?o�=?bt1?o�=?bt1?o�=?bt1?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?�3f��?s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h�s���!h��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? ��V? �