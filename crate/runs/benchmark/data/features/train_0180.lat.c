HSEQd      ^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?^�#?��&?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?��1�:?�{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a��{:��+a�	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �	D? 
 �