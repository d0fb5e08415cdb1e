HSEQd      �q8?�mN?�q8?�mN?�q8?�mN?�q8?�mN?�q8?�mN?�q8?�mN?�q8?�mN?�q8?�mN?�q8?�mN?�q8?�mN?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?NQ�ZT-?��.���i���.���i���.���i���.���i���.���i���.���i���.���i���.���i���.���i���.���i���.���i���.���i���.���i���.���i�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�;p?؅"�