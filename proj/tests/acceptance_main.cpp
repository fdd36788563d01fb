// Acceptance harness: one pass/fail line per criterion, nonzero exit when
// any criterion fails.  Criteria are filled in as the library grows.
#include <cstdio>

int main() {
  std::printf("acceptance: no criteria registered yet\n");
  return 1;
}
