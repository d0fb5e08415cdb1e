HSEQd      }�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?}�L?��N?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?�F��!`?1>j��d�1>j��d�1>j��d�1>j��d�1>j��d�1>j��d�1>j��d�1>j��d�1>j��d�1>j��d��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF��=J?5bF�