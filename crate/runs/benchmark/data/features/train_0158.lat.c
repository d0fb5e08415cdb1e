HSEQd      �*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o��*�>�o���p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?��p?�5?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?LLS��m?Yiy��&��Yiy��&��Yiy��&��Yiy��&��Yiy��&��Yiy��&��Yiy��&��Yiy��&��Yiy��&��Yiy��&��Yiy��&��