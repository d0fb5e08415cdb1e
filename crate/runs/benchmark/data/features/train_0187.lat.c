HSEQd      �I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?�I?%9?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?���Z?�vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (��vg�� (�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�
�?�~�