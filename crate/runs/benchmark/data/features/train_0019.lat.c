HSEQd      ��M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t���M��t�'k�>�d�'k�>�d�'k�>�d�'k�>�d�'k�>�d�'k�>�d�'k�>�d�'k�>�d�'k�>�d�'k�>�d���G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?��G?��?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?����#"*?