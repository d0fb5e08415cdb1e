HSEQd      ���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?���'�8?�bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C��bL���C�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]�6r?��]���S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?��S?��v?