HSEQd      �q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�q̾9_?�N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���N�;���?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`��?sW`���E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>��E?mT�>