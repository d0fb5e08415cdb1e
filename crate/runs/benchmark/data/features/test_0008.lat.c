HSEQd      �A$?FNv��A$?FNv��A$?FNv��A$?FNv��A$?FNv��A$?FNv��A$?FNv��A$?FNv��A$?FNv��A$?FNv�ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?ZG�?�%$?����0�?����0�?����0�?����0�?����0�?����0�?����0�?����0�?����0�?����0�?����0�?����0�?����0�?����0�?�u������u������u������u������u������u������u������u������u������u������u������u������u������u������u�����