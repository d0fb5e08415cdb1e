HSEQd      �#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7��#?'�7�ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?ĦK?b�V?��O�7�??��O�7�??��O�7�??��O�7�??��O�7�??��O�7�??��O�7�??��O�7�??��O�7�??��O�7�??��O�7�??��O�7�??W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�W(C���Z�