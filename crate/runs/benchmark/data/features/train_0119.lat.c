HSEQd      3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?3te?4a?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u?��#���u? ��q� ��q� ��q� ��q� ��q� ��q� ��q� ��q� ��q� ��q� ��q� ��q� ��q� ��q� ��q�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�i��>gɂ�