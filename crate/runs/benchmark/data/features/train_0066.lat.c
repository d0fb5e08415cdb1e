HSEQd      {�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3�{�)?�3��Q?Y�L?�Q?Y�L?�Q?Y�L?�Q?Y�L?�Q?Y�L?�Q?Y�L?�Q?Y�L?�Q?Y�L?�Q?Y�L?�Q?Y�L??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S??�t���S?:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�:�;��Cs�