HSEQd      ��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?��g?Fg?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?�]˾��`?"�T�c:ھ"�T�c:ھ"�T�c:ھ"�T�c:ھ"�T�c:ھ"�T�c:ھ"�T�c:ھ"�T�c:ھ"�T�c:ھ"�T�c:ھ���>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E����>�`E�