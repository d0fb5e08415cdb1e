HSEQd      �%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	��%s��k	����>5�R����>5�R����>5�R����>5�R����>5�R����>5�R����>5�R����>5�R����>5�R����>5�R���p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>��p?�r�>`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?`d��-}q?