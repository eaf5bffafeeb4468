// Command-line front end; wired up after the library settles.
int main() { return 0; }
