HSEQd      nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'?nrO?;'??u	���??u	���??u	���??u	���??u	���??u	���??u	���??u	���??u	���??u	���??u	���??u	���?S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB�S=�/cB���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp���S?Ʒp�