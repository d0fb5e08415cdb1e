HSEQd      �'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?�'?�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?��ܾ�?>r���>r���>r���>r���>r���>r���>r���>r���>r���>r���>r���>r���>r���>r���>r���E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��E�?2%��