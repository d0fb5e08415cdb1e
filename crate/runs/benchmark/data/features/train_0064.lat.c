HSEQd      MwD?A�?MwD?A�?MwD?A�?MwD?A�?MwD?A�?MwD?A�?MwD?A�?MwD?A�?MwD?A�?MwD?A�?MwD?A�?MwD?A�?MwD?A�?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?~�"�J&K?y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;����y�;�����?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN��?hN�