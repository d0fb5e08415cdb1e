HSEQd      �$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��$?�%X��TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?�TU?�?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?3ٽ��Pg?Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�Ѯo�pt�