HSEQd      ��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?��? �2?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?`P3�;?�V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^��V��1^�8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��8YK?��