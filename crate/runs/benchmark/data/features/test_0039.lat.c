HSEQd      �^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�^���.?�j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��j'��'��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��{?k&��V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?�V=?�+?