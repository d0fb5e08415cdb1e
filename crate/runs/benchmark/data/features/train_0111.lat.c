HSEQd      �y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$��y:���$�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�,$?�D�x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?x�:?��0?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?WjH���B?