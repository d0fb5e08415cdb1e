HSEQd      Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�Қ?��d�kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>kU?!��>1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?1 ��a?.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�.�x��ѽ�