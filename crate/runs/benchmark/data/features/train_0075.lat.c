HSEQd      /�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?/�#�s�S?��i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@���i�d;@��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g��b/?�g�giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?giX?��B?