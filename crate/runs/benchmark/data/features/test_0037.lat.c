HSEQd      ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?ֹ�0Q?��u���
���u���
���u���
���u���
���u���
���u���
���u���
���u���
���u���
���u���
���u���
���u���
���u���
���u���
�,��>���,��>���,��>���,��>���,��>���,��>���,��>���,��>���,��>���,��>���,��>���,��>���,��>���,��>���,��>���,��>����O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>�O�?ix�>