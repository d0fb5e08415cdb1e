HSEQd      ��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?��? g?���?���?���?���?���?���?���?���?���?���?���?���?���?���?���?���?���?���?����������������������������������������������������������������������������������������������������������������������������������������������������������������������������������������������������8?$"��8?$"��8?$"��8?$"��8?$"��8?$"��8?$"��8?$"��8?$"��8?$"��8?$"��8?$"�