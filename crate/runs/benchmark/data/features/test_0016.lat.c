HSEQd      �$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i����$i�����>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊���>싊��q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>�q�?�K�>��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?��}����?