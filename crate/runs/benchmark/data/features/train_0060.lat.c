HSEQd      �&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y��&?�Y�kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?kS?�>?��<?��<?��<?��<?��<?��<?��<?��<?��<?��<?��<?��<?��<?��<?��<?��<?��<?�9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&��9&�<�&�