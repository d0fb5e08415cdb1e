HSEQd      �?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7��?8�b'7���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3���8?�H3��>?�*[?�>?�*[?�>?�*[?�>?�*[?�>?�*[?�>?�*[?�>?�*[?�>?�*[?�>?�*[?�>?�*[?�>?�*[?�>?�*[?z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??z�h��P??