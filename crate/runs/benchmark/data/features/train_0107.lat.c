HSEQd      �3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����3H�����U�>M;��U�>M;��U�>M;��U�>M;��U�>M;��U�>M;��U�>M;��U�>M;��U�>M;��U�>M;��U�>M;��U�>M;��U�>M;��U�>M;�p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>p=#?8�>��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?��h7,?