HSEQd      �$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�$���+?�')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;��')�� ;���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F���;?�F�*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>*�J?���>