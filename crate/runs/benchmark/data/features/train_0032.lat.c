HSEQd      �5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�5?Lp!?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?�z�W/J?c�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľc�v�|�ľ߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�߭>�^X�