HSEQd      +�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`����+�`�����?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d��?4�d�zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?zV?Z<?6�0��W?6�0��W?6�0��W?6�0��W?6�0��W?6�0��W?6�0��W?6�0��W?6�0��W?6�0��W?6�0��W?