HSEQd      W(??�?W(??�?W(??�?W(??�?W(??�?W(??�?W(??�?W(??�?W(??�?W(??�?W(??�?W(??�?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?8N	���S?��N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���N��@���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S���5?��S�