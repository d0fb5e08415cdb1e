HSEQd      Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?Q@3?��+?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?d,$�N�*?E7����E7����E7����E7����E7����E7����E7����E7����E7����E7����E7����E7����E7����$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���$�?w���