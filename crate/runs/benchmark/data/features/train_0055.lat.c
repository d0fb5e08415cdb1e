HSEQd      ��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?��0�MO?19E��YR�19E��YR�19E��YR�19E��YR�19E��YR�19E��YR�19E��YR�19E��YR�19E��YR�19E��YR���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\���]?�G\��v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?�v|?��N?