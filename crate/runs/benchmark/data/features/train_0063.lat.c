HSEQd      �>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��>&�w��i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>�i�?���>1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?1���#w?��?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96���?��96�