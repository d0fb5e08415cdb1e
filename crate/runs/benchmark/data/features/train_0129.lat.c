HSEQd      �w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��w��f"��m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?����m?���H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>H?I��>�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?�㾠�:?