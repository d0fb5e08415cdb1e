HSEQd      .��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?.��P�@?�>��+!��>��+!��>��+!��>��+!��>��+!��>��+!��>��+!��>��+!��>��+!��>��+!��>��+!��>��+!��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U��"?O5U�v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?v�<?A_?