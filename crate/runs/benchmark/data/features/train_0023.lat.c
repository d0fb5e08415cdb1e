HSEQd      J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�J]?n�3�:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?:FH?��?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?��e�]?�@4��m/��@4��m/��@4��m/��@4��m/��@4��m/��@4��m/��@4��m/��@4��m/��@4��m/��@4��m/��@4��m/�