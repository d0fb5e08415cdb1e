HSEQd      [H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>����[H>�����?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��?=F,��*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�*?���>�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?�  ���?