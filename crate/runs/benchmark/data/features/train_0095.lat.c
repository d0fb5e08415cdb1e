HSEQd      �["��X��["��X��["��X��["��X��["��X��["��X��["��X��["��X��["��X��["��X��["��X��["��X�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�v�(?�F�@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?@/N?RR?9���O?9���O?9���O?9���O?9���O?9���O?9���O?9���O?9���O?9���O?9���O?9���O?