HSEQd      1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?1d?DO,?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?[K�շ?� ���+�� ���+�� ���+�� ���+�� ���+�� ���+�� ���+�� ���+�� ���+�� ���+�� ���+�� ���+�� ���+�� ���+�� ���+����>�h뾲��>�h뾲��>�h뾲��>�h뾲��>�h뾲��>�h뾲��>�h뾲��>�h뾲��>�h뾲��>�h뾲��>�h�