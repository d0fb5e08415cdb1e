HSEQd      ;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?;(?�kJ?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?f��d�?�2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��2
��7��?�I ��?�I ��?�I ��?�I ��?�I ��?�I ��?�I ��?�I ��?�I ��?�I ��?�I ��?�I ��?�I ��?�I �