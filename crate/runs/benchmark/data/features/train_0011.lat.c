HSEQd      <?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ�<?�EJ��'?�W?�'?�W?�'?�W?�'?�W?�'?�W?�'?�W?�'?�W?�'?�W?�'?�W?�'?�W?�'?�W?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?�QV�TR?��S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u���S��:u�