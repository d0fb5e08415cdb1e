HSEQd      �[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?�[?O�4?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?����%E?Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.���Jdf�.����(�>���(�>���(�>���(�>���(�>���(�>���(�>���(�>���(�>���(�>���(�>���(�>���(�>��