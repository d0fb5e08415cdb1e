HSEQd      I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?I�6?03$?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?Y�N�S?\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ\�/���ľ��>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U���>2~U�