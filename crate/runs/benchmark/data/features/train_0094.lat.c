HSEQd      ��?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���?vlk���o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?��o?��	?羨7}?羨7}?羨7}?羨7}?羨7}?羨7}?羨7}?羨7}?羨7}?羨7}?羨7}?2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���2n���