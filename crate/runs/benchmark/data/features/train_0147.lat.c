HSEQd      �tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��tG�d$��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,��?��,�gS�>I��>gS�>I��>gS�>I��>gS�>I��>gS�>I��>gS�>I��>gS�>I��>gS�>I��>gS�>I��>gS�>I��>gS�>I��>gS�>I��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>̶۾X��>