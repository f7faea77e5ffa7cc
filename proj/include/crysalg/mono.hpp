#ifndef CRYSALG_MONO_HPP
#define CRYSALG_MONO_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace crysalg {

/// An sl2 monomial x^i y^j.  As a node of B(i+j) it sits at distance i from
/// the highest-weight node y^(i+j), with eps = i, phi = j, wt = j - i.
struct Mono {
  std::int64_t i = 0;
  std::int64_t j = 0;

  std::int64_t deg() const { return i + j; }
  std::int64_t wt() const { return j - i; }
  std::int64_t eps() const { return i; }
  std::int64_t phi() const { return j; }

  /// Highest-weight node of B(n).
  static Mono hw(std::int64_t n) { return {0, n}; }
  /// Lowest-weight node of B(n).
  static Mono lw(std::int64_t n) { return {n, 0}; }

  /// Chain reversal x^i y^j -> x^j y^i within B(i+j).
  Mono flip() const { return {j, i}; }

  /// f-step; stays in the same B(n), {-1,-1} encodes 0.
  Mono f() const { return j > 0 ? Mono{i + 1, j - 1} : Mono{-1, -1}; }
  Mono e() const { return i > 0 ? Mono{i - 1, j + 1} : Mono{-1, -1}; }
  bool is_zero() const { return i < 0; }

  std::string label() const;
  static Mono parse(const std::string& s);  // throws std::invalid_argument

  friend auto operator<=>(const Mono&, const Mono&) = default;
};

}  // namespace crysalg

#endif
