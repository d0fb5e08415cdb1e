HSEQd      �M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�M�Wʾ�X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���X>I$���M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=�M�?r4=
�A=��?
�A=��?
�A=��?
�A=��?
�A=��?
�A=��?
�A=��?
�A=��?
�A=��?
�A=��?
�A=��?
�A=��?