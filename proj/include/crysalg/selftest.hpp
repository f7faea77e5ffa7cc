#ifndef CRYSALG_SELFTEST_HPP
#define CRYSALG_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace crysalg {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // first failure witness, empty when passing
};

/// The acceptance checks, one result per criterion.  The seed feeds the
/// randomized spot checks (everything load-bearing is exhaustive).
std::vector<CriterionResult> run_selftest(std::uint64_t seed = 20250810);

}  // namespace crysalg

#endif
