HSEQd      :)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?:)G?fm8?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?�?(��Z4?w�9�5W �w�9�5W �w�9�5W �w�9�5W �w�9�5W �w�9�5W �w�9�5W �w�9�5W �w�9�5W �w�9�5W �w�9�5W �w�9�5W �>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�>).?�%�