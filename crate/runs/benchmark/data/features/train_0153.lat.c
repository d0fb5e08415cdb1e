HSEQd      WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r�WCh�r��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��W?�k��@U?-=?�@U?-=?�@U?-=?�@U?-=?�@U?-=?�@U?-=?�@U?-=?�@U?-=?�@U?-=?�@U?-=?�@U?-=?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?%�7�˰i?