// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>

#include "ocgw/checks.hpp"

int main() {
  auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  ocgw::run_acceptance([&](const ocgw::Criterion& c) {
    if (!c.ok) ++failed;
    std::printf("[%s] criterion %2d: %s | %s\n", c.ok ? "PASS" : "FAIL", c.id, c.what.c_str(), c.detail.c_str());
    std::fflush(stdout);
  });
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 11 criteria failed (%.1f s)\n", failed, dt);
  return failed == 0 ? 0 : 1;
}
