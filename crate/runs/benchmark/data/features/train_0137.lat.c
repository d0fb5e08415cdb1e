HSEQd      ��?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k���?��k�1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��>1?y?'��> ��WJk? ��WJk? ��WJk? ��WJk? ��WJk? ��WJk? ��WJk? ��WJk? ��WJk? ��WJk? ��WJk? ��WJk? ��WJk? ��WJk?����W52�����W52�����W52�����W52�����W52�����W52�����W52�����W52�����W52�����W52�����W52�