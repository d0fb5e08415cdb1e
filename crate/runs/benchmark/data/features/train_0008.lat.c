HSEQd      �;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�;F?���>�k�~�E?�k�~�E?�k�~�E?�k�~�E?�k�~�E?�k�~�E?�k�~�E?�k�~�E?�k�~�E?�k�~�E?�k�~�E?�k�~�E?$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[��$F�[���8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<��8�>!S<�