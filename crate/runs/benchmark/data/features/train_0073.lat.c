HSEQd      ��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?��0?f~B?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?o �?;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>���;2>��羀��>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[����>,�[�