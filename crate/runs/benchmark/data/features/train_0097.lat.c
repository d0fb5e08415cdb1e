HSEQd      ֪���!?֪���!?֪���!?֪���!?֪���!?֪���!?֪���!?֪���!?֪���!?֪���!?֪���!?lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�lP�Ӏ�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.�Ju?��.��F?(��>�F?(��>�F?(��>�F?(��>�F?(��>�F?(��>�F?(��>�F?(��>�F?(��>�F?(��>�F?(��>�F?(��>