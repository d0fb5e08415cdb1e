HSEQd      (\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��(\J��z��
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>�
/?zJ>���1?�*?��1?�*?��1?�*?��1?�*?��1?�*?��1?�*?��1?�*?��1?�*?��1?�*?��1?�*?��1?�*?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?)�+��)?