HSEQd      C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?C?2�*?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?U�,�'?��=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=�������=��������>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R����>n,R�