// Acceptance suite: one pass/fail line per criterion (placeholder).
int main() { return 0; }
