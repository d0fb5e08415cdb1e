HSEQd      3X?)E?�3X?)E?�3X?)E?�3X?)E?�3X?)E?�3X?)E?�3X?)E?�3X?)E?�3X?)E?�3X?)E?�3X?)E?�3X?)E?�<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y?<�f?��Y? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}? �K�:}?0���Ӈt�0���Ӈt�0���Ӈt�0���Ӈt�0���Ӈt�0���Ӈt�0���Ӈt�0���Ӈt�0���Ӈt�0���Ӈt�0���Ӈt�0���Ӈt�