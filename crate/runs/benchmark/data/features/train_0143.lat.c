HSEQd      �F��hO?�F��hO?�F��hO?�F��hO?�F��hO?�F��hO?�F��hO?�F��hO?�F��hO?�F��hO?�F��hO?�F��hO?,ef�C��,ef�C��,ef�C��,ef�C��,ef�C��,ef�C��,ef�C��,ef�C��,ef�C��,ef�C���u�>�~J��u�>�~J��u�>�~J��u�>�~J��u�>�~J��u�>�~J��u�>�~J��u�>�~J��u�>�~J��u�>�~J�d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>d?���>