HSEQd      �q����	��q����	��q����	��q����	��q����	��q����	��q����	��q����	��q����	��q����	��?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț���?ț��F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?F"�?G�?������?������?������?������?������?������?������?������?������?������?