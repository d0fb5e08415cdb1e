HSEQd      �T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(��T��(� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4� �5?�(4��&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�&?_�E?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?�Ri��"?