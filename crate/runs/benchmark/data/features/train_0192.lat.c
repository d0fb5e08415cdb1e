HSEQd      �?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj��?�qj�i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?i@a?� ?�U��ax?�U��ax?�U��ax?�U��ax?�U��ax?�U��ax?�U��ax?�U��ax?�U��ax?�U��ax?�U��ax?�Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG澃Mu�KG�