HSEQd      �1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h��1!?�h�o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?o�j?�(R?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\?ܒS���\??�b��bR�?�b��bR�?�b��bR�?�b��bR�?�b��bR�?�b��bR�?�b��bR�?�b��bR�?�b��bR�?�b��bR�?�b��bR�