HSEQd      �[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,��[\��r,���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���?�Vd���O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?��O?>�?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?�u���J?