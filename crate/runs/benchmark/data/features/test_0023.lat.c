HSEQd      �39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?�39?r!?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?B�׾'�?�L� ��L� ��L� ��L� ��L� ��L� ��L� ��L� ��L� ��L� �L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�L?*&�