HSEQd      �S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|���S7�|��G(�>�c6�G(�>�c6�G(�>�c6�G(�>�c6�G(�>�c6�G(�>�c6�G(�>�c6�G(�>�c6�G(�>�c6�G(�>�c6�G(�>�c6�C�I?$�?C�I?$�?C�I?$�?C�I?$�?C�I?$�?C�I?$�?C�I?$�?C�I?$�?C�I?$�?C�I?$�?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?��O�F?