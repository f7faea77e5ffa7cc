#ifndef CRYSALG_EXTINT_HPP
#define CRYSALG_EXTINT_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace crysalg {

/// An integer extended by -infinity, with the convention -inf + n = -inf.
/// Used for the string statistics eps_i / phi_i.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : finite_(true), v_(v) {}

  static constexpr ExtInt minus_inf() {
    ExtInt e;
    e.finite_ = false;
    return e;
  }

  constexpr bool finite() const { return finite_; }

  std::int64_t value() const {
    if (!finite_) throw std::logic_error("ExtInt: value() of -inf");
    return v_;
  }

  friend constexpr ExtInt operator+(ExtInt a, std::int64_t n) {
    return a.finite_ ? ExtInt(a.v_ + n) : minus_inf();
  }
  friend constexpr ExtInt operator-(ExtInt a, std::int64_t n) { return a + (-n); }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  // -inf compares below every integer
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return a < b || a == b; }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return b <= a; }

  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  bool finite_ = true;
  std::int64_t v_ = 0;
};

inline ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

}  // namespace crysalg

#endif
