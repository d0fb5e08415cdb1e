HSEQd      ��?��S���?��S���?��S���?��S���?��S���?��S���?��S���?��S���?��S���?��S���?��S���e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?��e?0�?���|�w?���|�w?���|�w?���|�w?���|�w?���|�w?���|�w?���|�w?���|�w?���|�w?�n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n�����n����