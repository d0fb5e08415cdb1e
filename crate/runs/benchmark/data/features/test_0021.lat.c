HSEQd      z a�x'"�z a�x'"�z a�x'"�z a�x'"�z a�x'"�z a�x'"�z a�x'"�z a�x'"�z a�x'"�z a�x'"�z a�x'"�z a�x'"��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��C?$�n��,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?�,b?Ki?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?X���Q!?