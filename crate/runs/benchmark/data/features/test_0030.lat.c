HSEQd      �#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��#7?\?F��@V?[9?�@V?[9?�@V?[9?�@V?[9?�@V?[9?�@V?[9?�@V?[9?�@V?[9?�@V?[9?�@V?[9? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY? �G��gY?V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�V<y���P�