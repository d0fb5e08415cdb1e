HSEQd      ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?�ˊy���?��5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?�����5?����^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?^h?��+?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?x��O�q?