HSEQd      {�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��{�?�e��Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?Mih?�X>?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?v�Q�5�M?��I���1���I���1���I���1���I���1���I���1���I���1���I���1���I���1���I���1���I���1���I���1�