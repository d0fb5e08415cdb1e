HSEQd      ��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?��Y?2{0?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?b�;?N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾N�d��흾bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��bx�>q4��