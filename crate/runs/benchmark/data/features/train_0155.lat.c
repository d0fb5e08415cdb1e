HSEQd      �?���0��?���0��?���0��?���0��?���0��?���0��?���0��?���0��?���0��?���0��?���0��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��A&?r|?��?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??�?�??9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>9\M��7�>