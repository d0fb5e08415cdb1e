HSEQd      \��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?\��ǹ{?u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:�u��#,:��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i��A?.1i�L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?L�{?�5?