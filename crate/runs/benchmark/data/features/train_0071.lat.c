HSEQd      ����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?����BM?�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾�Z��˾Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�Թ>�)l�,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>,�_?r��>