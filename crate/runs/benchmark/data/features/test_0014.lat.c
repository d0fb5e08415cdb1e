HSEQd      ��2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c���2?��c�ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?ٌs?[I?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?08K���L?�p���u��p���u��p���u��p���u��p���u��p���u��p���u��p���u��p���u��p���u��p���u��p���u�