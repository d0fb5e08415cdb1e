HSEQd      �AG?��K��AG?��K��AG?��K��AG?��K��AG?��K��AG?��K��AG?��K��AG?��K��AG?��K��AG?��K�ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?ˀ]?ͤ(?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?i���Z?�j��HA��j��HA��j��HA��j��HA��j��HA��j��HA��j��HA��j��HA��j��HA��j��HA��j��HA��j��HA�