HSEQd      D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F����D�F�����	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o��	?��o���?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?��?�?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?.0:�Ƒ?