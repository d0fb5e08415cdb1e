HSEQd      �84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�84�vMQ?�;��tL��;��tL��;��tL��;��tL��;��tL��;��tL��;��tL��;��tL��;��tL��;��tL���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G���Q?5�G�>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?>?�tB?