HSEQd      x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?x\?w}?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?
~���x?�؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��؁��)��� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z���� ?�z��