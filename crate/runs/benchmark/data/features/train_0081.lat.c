HSEQd      x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% �x	�>6% ��pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�pC?]�>�����B?�����B?�����B?�����B?�����B?�����B?�����B?�����B?�����B?�����B?�����B?�����B?�����B?��4��n���4��n���4��n���4��n���4��n���4��n���4��n���4��n���4��n���4��n���4��n���4��n���4��n���4��n�