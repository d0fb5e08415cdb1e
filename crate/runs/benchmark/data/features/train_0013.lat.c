HSEQd      �\+�l���\+�l���\+�l���\+�l���\+�l���\+�l���\+�l���\+�l���\+�l���\+�l���\+�l���\+�l���\+�l���\+�l�����>�AV����>�AV����>�AV����>�AV����>�AV����>�AV����>�AV����>�AV����>�AV����>�AV�$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�>$Ղ?�
�> )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ? )��Ȍ?