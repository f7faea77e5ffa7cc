#include "crysalg/monoid.hpp"

#include <stdexcept>

#include "crysalg/tensor.hpp"

namespace crysalg {

std::string Mono::label() const {
  if (i < 0 || j < 0) throw std::logic_error("Mono::label of zero");
  if (i == 0 && j == 0) return "1";
  std::string s;
  if (i == 1)
    s += "x";
  else if (i > 1)
    s += "x^" + std::to_string(i);
  if (j == 1)
    s += "y";
  else if (j > 1)
    s += "y^" + std::to_string(j);
  return s;
}

Mono Mono::parse(const std::string& s) {
  if (s == "1") return {0, 0};
  Mono m{0, 0};
  std::size_t p = 0;
  auto read_exp = [&]() -> std::int64_t {
    if (p >= s.size() || s[p] != '^') return 1;
    ++p;
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (start == p) throw std::invalid_argument("Mono::parse: bad exponent in '" + s + "'");
    return std::stoll(s.substr(start, p - start));
  };
  if (p < s.size() && s[p] == 'x') {
    ++p;
    m.i = read_exp();
  }
  if (p < s.size() && s[p] == 'y') {
    ++p;
    m.j = read_exp();
  }
  if (p != s.size() || (m.i == 0 && m.j == 0))
    throw std::invalid_argument("Mono::parse: malformed monomial '" + s + "'");
  return m;
}

std::string QMono::label() const {
  if (qexp == 0) return mono.label();
  return "q^" + std::to_string(qexp) + " " + mono.label();
}

std::string DualMono::label() const { return "(" + mono.label() + ")∨"; }

std::optional<Mono> mu0(const Mono& a, const Mono& b) {
  if (a.j == 0) return Mono{a.i + b.i, b.j};
  if (b.i == 0) return Mono{a.i, a.j + b.j};
  return std::nullopt;
}

QMono mu_q(const Mono& a, const Mono& b) {
  return {-a.j * b.i, Mono{a.i + b.i, a.j + b.j}};
}

std::optional<DualMono> dual_mu(const DualMono& a, const DualMono& b) {
  if (a.mono.i == 0) return DualMono{Mono{b.mono.i, a.mono.j + b.mono.j}};
  if (b.mono.j == 0) return DualMono{Mono{a.mono.i + b.mono.i, a.mono.j}};
  return std::nullopt;
}

std::optional<Mono> mu0_by_projection(const Mono& a, const Mono& b) {
  auto [gamma, image] = tensor_image(a, b);
  if (gamma != a.deg() + b.deg()) return std::nullopt;
  return image;
}

bool duality_failure(std::int64_t n) {
  const Crystal bn = build_Bn(n);
  const Crystal dn = dual(bn);
  // iota: B(0) -> B(n)^ (x) B(n), the trivial component of the decomposition
  const TensorCrystal right = tensor(dn, bn);
  // projection B(n) (x) B(n)^ ->> B(0): supported on the trivial component
  const TensorCrystal left = tensor(bn, dn);
  auto trivial_pair = [](const TensorCrystal& t) {
    for (const auto& part : decompose(t.crystal).parts)
      if (part.view.nodes.size() == 1) return t.factor[part.view.nodes[0]];
    throw std::logic_error("duality_failure: no trivial component");
  };
  const auto [iota1, iota2] = trivial_pair(right);  // in B(n)^ (x) B(n)
  const auto [proj1, proj2] = trivial_pair(left);   // in B(n) (x) B(n)^
  for (std::size_t b = 0; b < bn.size(); ++b) {
    // b -> b (x) iota1 (x) iota2 -> (projection of (b, iota1)) (x) iota2
    const bool survives = static_cast<int>(b) == proj1 && iota1 == proj2;
    if (survives) return false;  // some node has nonzero image
  }
  return true;
}

}  // namespace crysalg
