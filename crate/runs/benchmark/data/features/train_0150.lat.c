HSEQd      ��'?Xd����'?Xd����'?Xd����'?Xd����'?Xd����'?Xd����'?Xd����'?Xd����'?Xd����'?Xd����'?Xd����'?Xd����'?Xd��zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?zf�?X|#?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?�4��4y ��4��4y ��4��4y ��4��4y ��4��4y ��4��4y ��4��4y ��4��4y ��4��4y ��4��4y ��4��4y ��4��4y �