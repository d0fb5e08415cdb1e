HSEQd      ��L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���L�p.���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���g?�}���?}�?��?}�?��?}�?��?}�?��?}�?��?}�?��?}�?��?}�?��?}�?��?}�?��?}�?��?}�?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?;���=g?