HSEQd      3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?3}	?Z�+?�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>�Bu�K��>2�����2�����2�����2�����2�����2�����2�����2�����2�����2������ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(��ox?b(�