HSEQd      �(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?�(+�e�=?��<��n���<��n���<��n���<��n���<��n���<��n���<��n���<��n���<��n���<��n���<��n�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�jT�>!�/�=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>=S=?���>