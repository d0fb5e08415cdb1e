HSEQd      ��?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���?�$E���;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>��;?��>�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?�TѾ�Q?^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���^|N�r���