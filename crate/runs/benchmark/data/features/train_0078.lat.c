HSEQd      
EH?�?
EH?�?
EH?�?
EH?�?
EH?�?
EH?�?
EH?�?
EH?�?
EH?�?
EH?�?
EH?�?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?���O?+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�+,y�OP1�Zg0?��Zg0?��Zg0?��Zg0?��Zg0?��Zg0?��Zg0?��Zg0?��Zg0?��Zg0?��Zg0?��Zg0?��