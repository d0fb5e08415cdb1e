HSEQd      0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?0���:?F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*����F�*�������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>������>����	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>�	'?s�>