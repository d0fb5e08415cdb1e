HSEQd      �7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?�7+?/?s|���(?s|���(?s|���(?s|���(?s|���(?s|���(?s|���(?s|���(?s|���(?s|���(?s|���(?s|���(?s|���(?s|���(?��,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E���,��E��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V��Z?�V�