HSEQd      7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?7�;?��#?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?˿���r?�-��0�վ�-��0�վ�-��0�վ�-��0�վ�-��0�վ�-��0�վ�-��0�վ�-��0�վ�-��0�վ�-��0�վp��>Yh��p��>Yh��p��>Yh��p��>Yh��p��>Yh��p��>Yh��p��>Yh��p��>Yh��p��>Yh��p��>Yh��p��>Yh��p��>Yh��p��>Yh��