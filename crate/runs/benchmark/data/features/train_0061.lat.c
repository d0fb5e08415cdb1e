HSEQd      9�$��[o?9�$��[o?9�$��[o?9�$��[o?9�$��[o?9�$��[o?9�$��[o?9�$��[o?9�$��[o?9�$��[o?^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(�^gl���(���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W���)?6�W��q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?�q|?ZR/?