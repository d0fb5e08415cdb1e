HSEQd      �����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�����O?�~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.��~`�.�.�{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ��{�<?I ���C�?xhD?�C�?xhD?�C�?xhD?�C�?xhD?�C�?xhD?�C�?xhD?�C�?xhD?�C�?xhD?�C�?xhD?�C�?xhD?�C�?xhD?