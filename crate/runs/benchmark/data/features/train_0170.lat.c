HSEQd      �).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?�).?��?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?��M�?���޾���޾���޾���޾���޾���޾���޾���޾���޾���޾���޾���޾���޾���޾�h�>�I'��h�>�I'��h�>�I'��h�>�I'��h�>�I'��h�>�I'��h�>�I'��h�>�I'��h�>�I'��h�>�I'�