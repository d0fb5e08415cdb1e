HSEQd      fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?fi�$H?�h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���h���>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��>��s��w?%��>�w?%��>�w?%��>�w?%��>�w?%��>�w?%��>�w?%��>�w?%��>�w?%��>�w?%��>�w?%��>�w?%��>�w?%��>