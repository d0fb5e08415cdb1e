HSEQd      1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?1%M?o�<?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?���Z\?�n����n����n����n����n����n����n����n����n����n����n����n����n����2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x��2?K�x�