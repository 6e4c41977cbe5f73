// Runs every acceptance check and prints one line per criterion.
// Exit status is the number of failed checks (capped at 1 for ctest).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "vfkit/verification.hpp"

int main(int argc, char** argv) {
  vfkit::verification::SuiteOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: %s [--seed N]\n", argv[0]);
      return 2;
    }
  }

  int failed = 0;
  for (const auto& check : vfkit::verification::acceptance_checks()) {
    const auto r = vfkit::verification::run_check(check, options);
    std::printf("[%s] criterion %2d: %s (%.3f s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
    if (r.time_limit > 0) std::printf(", limit %.1f s", r.time_limit);
    std::printf(")\n         %s\n", r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(vfkit::verification::acceptance_checks().size()) - failed,
              vfkit::verification::acceptance_checks().size());
  return failed == 0 ? 0 : 1;
}
