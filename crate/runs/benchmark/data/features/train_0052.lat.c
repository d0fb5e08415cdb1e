HSEQd      ��<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S���<?�S�*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?*;P?�&T?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?��*���h?�����-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-������-�