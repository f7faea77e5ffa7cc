#ifndef CRYSALG_CARTAN_HPP
#define CRYSALG_CARTAN_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace crysalg {

/// A weight, stored as its coordinate vector (lambda_i(mu))_{i in I} in the
/// basis of fundamental weights.  For sl2 this is a single integer.
struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  /// sl2 convenience.
  static Weight sl2(std::int64_t n) { return Weight({n}); }

  std::size_t rank() const { return coords.size(); }
  bool dominant() const {
    for (auto c : coords)
      if (c < 0) return false;
    return true;
  }
  bool zero() const {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) = default;

  std::string str() const;
};

/// Cartan datum: color labels I and the integer pairing matrix with entries
/// lambda_i(alpha_j).  Diagonal entries are 2, off-diagonal entries <= 0.
struct CartanDatum {
  std::vector<std::string> index_set;
  std::vector<std::vector<std::int64_t>> pairing;

  static CartanDatum sl2();

  std::size_t rank() const { return index_set.size(); }

  /// lambda_i(mu) for mu in fundamental-weight coordinates.
  std::int64_t apply(std::size_t i, const Weight& mu) const { return mu.coords.at(i); }

  /// The coordinate vector of the simple root alpha_j (column j of the matrix).
  Weight simple_root(std::size_t j) const;

  /// Violated axioms, empty if the datum is valid.
  std::vector<std::string> validate() const;

  int color_index(const std::string& label) const;  // -1 if unknown

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) = default;
};

}  // namespace crysalg

#endif
