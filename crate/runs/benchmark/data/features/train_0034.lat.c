HSEQd      ��U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U������U����j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*�j2?^}*���>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?��>�X\?Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>Q_6��>