HSEQd      7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�7)?��D�
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?
�|?��?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?[�׾|�i?C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����C=k�����