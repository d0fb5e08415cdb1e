HSEQd      ��T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���T��}<���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���G?h�V���X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?��X? �B?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?hzB���x?