HSEQd      j��Uоj��Uоj��Uоj��Uоj��Uоj��Uоj��Uоj��Uоj��Uоj��Uоj��Uоj��Uоj��Uоj��Uо��$?[b���$?[b���$?[b���$?[b���$?[b���$?[b���$?[b���$?[b���$?[b���$?[b�h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2?h?ߣ2??�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>?�h8�>