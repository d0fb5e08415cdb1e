HSEQd      ����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?����OD?&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM�&�8�&JM���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=���G?��=�a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?a�%?��?