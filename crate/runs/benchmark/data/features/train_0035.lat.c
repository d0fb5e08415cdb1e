HSEQd      z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M�z�??C�M��I?>|1?�I?>|1?�I?>|1?�I?>|1?�I?>|1?�I?>|1?�I?>|1?�I?>|1?�I?>|1?�I?>|1?�I?>|1?�I?>|1?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?~$,�p G?�A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK��A8�eyK�