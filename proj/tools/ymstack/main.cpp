#include <cstdio>

int main() {
  std::fprintf(stderr, "ymstack: no subcommand given\n");
  return 2;
}
