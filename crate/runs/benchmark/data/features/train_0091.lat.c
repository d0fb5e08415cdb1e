HSEQd      P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!�P?R�C�!��*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r���*?�r��Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?Y�?K�&?s�
���?s�
���?s�
���?s�
���?s�
���?s�
���?s�
���?s�
���?s�
���?s�
���?s�
���?s�
���?