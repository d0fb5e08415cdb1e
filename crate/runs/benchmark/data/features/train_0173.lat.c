HSEQd      ��T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	���T�w}	����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W����>@}W�;Zn?�!?;Zn?�!?;Zn?�!?;Zn?�!?;Zn?�!?;Zn?�!?;Zn?�!?;Zn?�!?;Zn?�!?;Zn?�!?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?��V��ކ?