HSEQd       "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC? "_?DC?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?�mi�i�?Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿Y\��񷄿6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���6�x?���