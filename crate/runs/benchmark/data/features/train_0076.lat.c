HSEQd      �b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_��b?W�_���W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?��W?{82?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?e"%�>�T?\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�\i��JU�