HSEQd      g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0�g"�W�0���@?�����@?�����@?�����@?�����@?�����@?�����@?�����@?�����@?�����@?���k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?k�?VU:?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?�F*�i?