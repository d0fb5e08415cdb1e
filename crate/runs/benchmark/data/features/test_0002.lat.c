HSEQd      �`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�`V?	J.?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?�-���Z?����ۖ?�����ۖ?�����ۖ?�����ۖ?�����ۖ?�����ۖ?�����ۖ?�����ۖ?�����ۖ?�����ۖ?�����ۖ?�����ۖ?���@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?������@?����