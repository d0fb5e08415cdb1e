HSEQd      ��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��@0G?��W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W��侵�W�����(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt���(?Ѐt��E�?�T_?�E�?�T_?�E�?�T_?�E�?�T_?�E�?�T_?�E�?�T_?�E�?�T_?�E�?�T_?�E�?�T_?�E�?�T_?�E�?�T_?