HSEQd      ��_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}����_�}��o�!?�b�o�!?�b�o�!?�b�o�!?�b�o�!?�b�o�!?�b�o�!?�b�o�!?�b�o�!?�b�o�!?�b�o�!?�b�o�!?�b�o�!?�b���j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?��j?�F?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?}f.�Th?