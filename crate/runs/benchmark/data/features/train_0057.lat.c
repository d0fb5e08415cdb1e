HSEQd      �0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�0��S?�8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��8���J��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��PS?r<��?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?�?�VA?