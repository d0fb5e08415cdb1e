HSEQd      ��5���;���5���;���5���;���5���;���5���;���5���;���5���;���5���;���5���;���5���;���5���;���5���;���5���;�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�@�G?LUB�ԗ<?�K?ԗ<?�K?ԗ<?�K?ԗ<?�K?ԗ<?�K?ԗ<?�K?ԗ<?�K?ԗ<?�K?ԗ<?�K?ԗ<?�K?ԗ<?�K?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?mXP���2?