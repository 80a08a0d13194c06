// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "crsym/acceptance.hpp"

int main() {
  auto results = crsym::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s %2d - %s (%.2fs)\n", r.pass ? "ok  " : "FAIL", r.id,
                r.title.c_str(), r.seconds);
    for (const auto& n : r.notes)
      if (!r.pass || n.find("FAIL") != std::string::npos || n.find("note:") != std::string::npos)
        std::printf("%s\n", n.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed ? 1 : 0;
}
