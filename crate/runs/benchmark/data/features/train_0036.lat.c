HSEQd      �0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[��0?ݱ[�d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?d�I?m�:?�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??�>�8??D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�D�D�׾�