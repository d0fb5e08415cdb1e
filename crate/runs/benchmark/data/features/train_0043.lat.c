HSEQd      f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?f�?��i@?Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B�Ft"��=B���?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?����?��-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?-�>4�?