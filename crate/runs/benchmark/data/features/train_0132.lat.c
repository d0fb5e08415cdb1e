HSEQd      ?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��?KV�T��ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�ם?6�Q�is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?is?Yb0?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?��;��ď?