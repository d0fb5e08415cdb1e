HSEQd      �J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3��J��3���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t���'?_t�d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?d�?A1?>�&�2a�?>�&�2a�?>�&�2a�?>�&�2a�?>�&�2a�?>�&�2a�?>�&�2a�?>�&�2a�?>�&�2a�?>�&�2a�?>�&�2a�?