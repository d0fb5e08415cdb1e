HSEQd      Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?Y9=�yrf?�ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+��ik���+�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�M�G?g�sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?sIn?NlG?