HSEQd      ���>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|����>i�|��Zv?�?�Zv?�?�Zv?�?�Zv?�?�Zv?�?�Zv?�?�Zv?�?�Zv?�?�Zv?�?�Zv?�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?Y��9v�?ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����ׇ�����