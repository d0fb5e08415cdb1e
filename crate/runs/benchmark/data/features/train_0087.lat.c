HSEQd      RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?RJ?p�=?
S-��w!?
S-��w!?
S-��w!?
S-��w!?
S-��w!?
S-��w!?
S-��w!?
S-��w!?
S-��w!?
S-��w!?�(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,��(��:,�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�Em?��
�