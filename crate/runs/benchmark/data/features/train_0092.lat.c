HSEQd      �4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�4�Y�Z?�Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	��Gi�j�	���>�Kx���>�Kx���>�Kx���>�Kx���>�Kx���>�Kx���>�Kx���>�Kx���>�Kx���>�Kx���>�Kx�W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>W�?X�>