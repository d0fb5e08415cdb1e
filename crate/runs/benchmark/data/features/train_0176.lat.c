HSEQd      �r�X-��r�X-��r�X-��r�X-��r�X-��r�X-��r�X-��r�X-��r�X-��r�X-��r�X-��r�X-�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\�Φ�>�z\���B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?��B?N?���%W?���%W?���%W?���%W?���%W?���%W?���%W?���%W?���%W?���%W?