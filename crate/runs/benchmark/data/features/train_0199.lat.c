HSEQd      ���NW?���NW?���NW?���NW?���NW?���NW?���NW?���NW?���NW?���NW?���NW?�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾ�a0�ޏϾsX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8��sX�>8���?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?