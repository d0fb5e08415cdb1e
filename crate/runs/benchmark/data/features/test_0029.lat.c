HSEQd      ��?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���?n�_���;?W?��;?W?��;?W?��;?W?��;?W?��;?W?��;?W?��;?W?��;?W?��;?W?��;?W?��;?W?��;?W?��;?W?��;?W?^A�}�G?^A�}�G?^A�}�G?^A�}�G?^A�}�G?^A�}�G?^A�}�G?^A�}�G?^A�}�G?^A�}�G?�T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U����T7�U���