HSEQd      Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?Q??��?q)\��P7?q)\��P7?q)\��P7?q)\��P7?q)\��P7?q)\��P7?q)\��P7?q)\��P7?q)\��P7?q)\��P7?��@��B����@��B����@��B����@��B����@��B����@��B����@��B����@��B����@��B����@��B����@��B���(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9��(�?�9�