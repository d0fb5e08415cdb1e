HSEQd      ���"/?���"/?���"/?���"/?���"/?���"/?���"/?���"/?���"/?���"/?H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H�����H������?߼��?߼��?߼��?߼��?߼��?߼��?߼��?߼��?߼��?߼��?߼��?߼��?߼��?߼��^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>�^E?i7�>