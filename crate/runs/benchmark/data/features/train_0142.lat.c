HSEQd      q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�q?��q�H��?j�?H��?j�?H��?j�?H��?j�?H��?j�?H��?j�?H��?j�?H��?j�?H��?j�?H��?j�?H��?j�?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?�%��cr?3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�3��Em�