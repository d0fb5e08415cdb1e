HSEQd      Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�Trp��{�'�-?�͒�'�-?�͒�'�-?�͒�'�-?�͒�'�-?�͒�'�-?�͒�'�-?�͒�'�-?�͒�'�-?�͒�'�-?�͒�'�-?�͒�'�-?�͒�s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?s��?L�K?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?��W�QI�?