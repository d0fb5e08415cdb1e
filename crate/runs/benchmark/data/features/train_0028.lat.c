HSEQd      k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?����k�/?������`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?��`?�=?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?�IK���z?WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�WIx�t�.�