HSEQd      �U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?�U?�	?QS%����?QS%����?QS%����?QS%����?QS%����?QS%����?QS%����?QS%����?QS%����?QS%����?QS%����?�hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��hj��.��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y��$0?�Y�