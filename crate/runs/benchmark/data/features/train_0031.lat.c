HSEQd      ��S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K���S�A�K��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��?��6��E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�E?�V1?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?�B#��o2?