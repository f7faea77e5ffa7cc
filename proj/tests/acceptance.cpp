// Acceptance suite: one line per criterion, exit 0 iff everything passes.

#include <chrono>
#include <cstdio>

#include "crysalg/selftest.hpp"

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto results = crysalg::run_selftest();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all = true;
  for (const auto& r : results) {
    std::printf("%s criterion %d: %s%s%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.pass ? "" : " [", r.detail.c_str(), r.pass ? "" : "]");
    all = all && r.pass;
  }
  const bool in_budget = seconds <= 180.0;
  std::printf("%s criterion 10: selftest aggregates 1-9 and exits 0 (%.2fs, budget 180s)\n",
              all && in_budget ? "PASS" : "FAIL", seconds);
  return all && in_budget ? 0 : 1;
}
