HSEQd      �R?�	?�R?�	?�R?�	?�R?�	?�R?�	?�R?�	?�R?�	?�R?�	?�R?�	?�R?�	?�R?�	?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?�}���a?S�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾS�J�NԾ�u�>����u�>����u�>����u�>����u�>����u�>����u�>����u�>����u�>����u�>����u�>����u�>����u�>����u�>���