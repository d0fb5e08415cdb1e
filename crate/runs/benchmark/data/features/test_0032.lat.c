HSEQd      �2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|��2?��|���?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?��?F�W?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?YNW�E[�?�����v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{������v{�