HSEQd      &
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T���&
T����s5?���s5?���s5?���s5?���s5?���s5?���s5?���s5?���s5?���s5?���s5?����?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?�Z����$?