HSEQd      K�P?d?K�P?d?K�P?d?K�P?d?K�P?d?K�P?d?K�P?d?K�P?d?K�P?d?K�P?d?K�P?d?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?�þ�^H?&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����&�����B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��B?��