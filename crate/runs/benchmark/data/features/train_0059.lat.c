HSEQd      �&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�&�јK?�}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}�����}������-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿��-?悿`n�?ؙD?`n�?ؙD?`n�?ؙD?`n�?ؙD?`n�?ؙD?`n�?ؙD?`n�?ؙD?`n�?ؙD?`n�?ؙD?`n�?ؙD?`n�?ؙD?