HSEQd      �??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^��??0)^�z�x?�:?z�x?�:?z�x?�:?z�x?�:?z�x?�:?z�x?�:?z�x?�:?z�x?�:?z�x?�:?z�x?�:?z�x?�:?z�x?�:?z�x?�:?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?*�=�>my?l��?�l��?�l��?�l��?�l��?�l��?�l��?�l��?�l��?�l��?�