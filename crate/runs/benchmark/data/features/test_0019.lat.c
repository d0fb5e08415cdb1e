HSEQd      �48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H��48?Q�H�P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?P:?_@?t}Q�v�:?t}Q�v�:?t}Q�v�:?t}Q�v�:?t}Q�v�:?t}Q�v�:?t}Q�v�:?t}Q�v�:?t}Q�v�:?t}Q�v�:?t}Q�v�:?t}Q�v�:?�J<�bM��J<�bM��J<�bM��J<�bM��J<�bM��J<�bM��J<�bM��J<�bM��J<�bM��J<�bM��J<�bM��J<�bM��J<�bM�