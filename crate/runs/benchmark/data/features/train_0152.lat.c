HSEQd      2�<�`Y?2�<�`Y?2�<�`Y?2�<�`Y?2�<�`Y?2�<�`Y?2�<�`Y?2�<�`Y?2�<�`Y?2�<�`Y?2�<�`Y?2�<�`Y?؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�؀^�x�q�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y�zh]?��y���r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?��r?�+K?