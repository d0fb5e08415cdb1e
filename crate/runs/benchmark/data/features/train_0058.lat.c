HSEQd      6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?6I?�7?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?��7��4+?�%2��3*��%2��3*��%2��3*��%2��3*��%2��3*��%2��3*��%2��3*��%2��3*��%2��3*��%2��3*��%2��3*��%2��3*�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�j{?\�.�