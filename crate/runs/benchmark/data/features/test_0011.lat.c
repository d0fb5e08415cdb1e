HSEQd      ��?�3���?�3���?�3���?�3���?�3���?�3���?�3���?�3���?�3���?�3���?�3���?�3���?�3�x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?x�7?��C?u,��b?u,��b?u,��b?u,��b?u,��b?u,��b?u,��b?u,��b?u,��b?u,��b?u,��b?@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�@�޾�@@�