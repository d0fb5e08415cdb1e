HSEQd      �W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل��W	?�ل�8b�?��>8b�?��>8b�?��>8b�?��>8b�?��>8b�?��>8b�?��>8b�?��>8b�?��>8b�?��>V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?V�߾J�?-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��-Ѕ��V��