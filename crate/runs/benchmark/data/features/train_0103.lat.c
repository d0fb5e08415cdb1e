HSEQd      p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?p�*�r?�~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h����~�h���R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�R~�>e�t�L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?L�?�~ ?