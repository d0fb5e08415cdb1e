HSEQd      }���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?}���� ?��`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#���`���#�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V�C8A?'V���;?pU?��;?pU?��;?pU?��;?pU?��;?pU?��;?pU?��;?pU?��;?pU?��;?pU?��;?pU?��;?pU?��;?pU?