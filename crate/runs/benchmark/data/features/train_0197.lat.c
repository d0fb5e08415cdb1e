HSEQd      08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B�08��B��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6��bE?ʸ6�0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?0�N?��?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?��{���^?