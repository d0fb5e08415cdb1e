HSEQd      �*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!��*`��!���>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y����>H�y��}�?���>�}�?���>�}�?���>�}�?���>�}�?���>�}�?���>�}�?���>�}�?���>�}�?���>�}�?���>�}�?���>�}�?���>�}�?���>�}�?���>c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?c���O�?