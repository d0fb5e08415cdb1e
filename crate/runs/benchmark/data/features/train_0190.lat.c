HSEQd      �r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*��r��3*�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�X��>�Ê�5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>5ȏ?y�>��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?��L����?