#ifndef CRYSALG_INTCOMB_HPP
#define CRYSALG_INTCOMB_HPP

#include <cstdint>
#include <map>

namespace crysalg {

/// A finitely-supported integer combination over an ordered label type.
/// Zero coefficients are never stored.
template <class L>
class IntComb {
 public:
  IntComb() = default;

  static IntComb basis(L label) {
    IntComb c;
    c.terms_[std::move(label)] = 1;
    return c;
  }

  void add(const L& label, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  std::int64_t coeff(const L& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? 0 : it->second;
  }

  bool zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  const std::map<L, std::int64_t>& terms() const& { return terms_; }
  std::map<L, std::int64_t> terms() && { return std::move(terms_); }

  IntComb& operator+=(const IntComb& o) {
    for (const auto& [l, k] : o.terms_) add(l, k);
    return *this;
  }
  IntComb& operator-=(const IntComb& o) {
    for (const auto& [l, k] : o.terms_) add(l, -k);
    return *this;
  }
  IntComb& operator*=(std::int64_t s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [l, k] : terms_) k *= s;
    return *this;
  }
  friend IntComb operator+(IntComb a, const IntComb& b) { return a += b; }
  friend IntComb operator-(IntComb a, const IntComb& b) { return a -= b; }
  friend IntComb operator*(IntComb a, std::int64_t s) { return a *= s; }

  friend bool operator==(const IntComb&, const IntComb&) = default;

 private:
  std::map<L, std::int64_t> terms_;
};

}  // namespace crysalg

#endif
