HSEQd      �M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe��M�>ɼe�~@e?���>~@e?���>~@e?���>~@e?���>~@e?���>~@e?���>~@e?���>~@e?���>~@e?���>~@e?���>~@e?���>k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?k6޾�gm?⏍�E��⏍�E��⏍�E��⏍�E��⏍�E��⏍�E��⏍�E��⏍�E��⏍�E��⏍�E��⏍�E��⏍�E��