HSEQd      ~�;�ќ?�~�;�ќ?�~�;�ќ?�~�;�ќ?�~�;�ќ?�~�;�ќ?�~�;�ќ?�~�;�ќ?�~�;�ќ?�~�;�ќ?�~�;�ќ?�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#�\f??��#��!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?�!M?�P?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?~�O�Γ2?