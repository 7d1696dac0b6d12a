// Runs every acceptance criterion at full size and prints one line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ficat/checks.hpp"

int main(int argc, char** argv) {
  ficat::ChecksOptions opts;
  if (argc > 1) opts.profile = argv[1];
  if (const char* s = std::getenv("FICAT_SEED")) opts.seed = std::strtoull(s, nullptr, 10);
  int failed = 0;
  auto results = ficat::run_checks(opts);
  for (const auto& r : results) {
    std::printf("%s criterion %2d  %-28s %8.2fs (limit %4.0fs)%s%s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.limit_seconds, r.error.empty() ? "" : "  ", r.error.c_str());
    if (!r.passed) std::printf("  detail: %s\n", r.detail.dump().c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed ? 1 : 0;
}
