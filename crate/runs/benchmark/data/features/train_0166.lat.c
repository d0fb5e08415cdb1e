HSEQd      ���>�!G����>�!G����>�!G����>�!G����>�!G����>�!G����>�!G����>�!G����>�!G����>�!G����>�!G����>�!G� �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ? �X?h ?9�&���i?9�&���i?9�&���i?9�&���i?9�&���i?9�&���i?9�&���i?9�&���i?9�&���i?9�&���i?M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�M�V��C�