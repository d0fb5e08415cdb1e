HSEQd      M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?M��;V?�fy�����fy�����fy�����fy�����fy�����fy�����fy�����fy�����fy�����fy�����fy�����fy�����fy������-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}���-?Ge}��|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?�|?`�M?