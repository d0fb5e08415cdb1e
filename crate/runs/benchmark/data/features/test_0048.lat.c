HSEQd      ;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���;�^���	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>��	a�>����?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>��?\#�>8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?8o��#��?