HSEQd      ��w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���w��|'���#?`�{���#?`�{���#?`�{���#?`�{���#?`�{���#?`�{���#?`�{���#?`�{���#?`�{���#?`�{���#?`�{��is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�is?�C?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?�.�btd?