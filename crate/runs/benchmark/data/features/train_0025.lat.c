HSEQd      K�G�5�/?K�G�5�/?K�G�5�/?K�G�5�/?K�G�5�/?K�G�5�/?K�G�5�/?K�G�5�/?K�G�5�/?K�G�5�/?K�G�5�/?K�G�5�/?CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g�CI�N�g���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d���?�*d�>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?>F?�
n?