HSEQd      #D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:�#D]�ڟ:��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��aR?݉O��y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?�y?p�/?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?y�2���{?