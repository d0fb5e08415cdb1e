HSEQd      D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�D@� �2�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�t[?OqO�$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?$!D?��K?Q�g�/�X?Q�g�/�X?Q�g�/�X?Q�g�/�X?Q�g�/�X?Q�g�/�X?Q�g�/�X?Q�g�/�X?Q�g�/�X?Q�g�/�X?Q�g�/�X?