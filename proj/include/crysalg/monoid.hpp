#ifndef CRYSALG_MONOID_HPP
#define CRYSALG_MONOID_HPP

#include <cstdint>
#include <optional>

#include "crysalg/mono.hpp"

namespace crysalg {

/// q^qexp x^i y^j, coefficients are bare powers of q.
struct QMono {
  std::int64_t qexp = 0;
  Mono mono;
  friend auto operator<=>(const QMono&, const QMono&) = default;
  std::string label() const;
};

/// A monomial of the dual monoid, (x^i y^j)^.
struct DualMono {
  Mono mono;
  friend auto operator<=>(const DualMono&, const DualMono&) = default;
  std::string label() const;
};

/// Crystal-limit product on bigsqcup B(n): x^(i+r) y^s if j = 0,
/// x^i y^(j+s) if r = 0, zero otherwise.  nullopt encodes zero.
std::optional<Mono> mu0(const Mono& a, const Mono& b);

/// Quantum-plane product q^(-j1 i2) x^(i1+i2) y^(j1+j2).
QMono mu_q(const Mono& a, const Mono& b);

/// Product on the duals: (x^r y^(j+s))^ if i = 0, (x^(i+r) y^j)^ if s = 0,
/// zero otherwise.
std::optional<DualMono> dual_mu(const DualMono& a, const DualMono& b);

/// mu0 recomputed as the projection onto the top component of the
/// decomposition of B(n) (x) B(m); the standing equality test against the
/// closed formula lives in the test suite.
std::optional<Mono> mu0_by_projection(const Mono& a, const Mono& b);

/// True iff the composition B(n) -> B(n) (x) B(n)^ (x) B(n) -> B(n) built
/// from the trivial-component inclusion and projection kills every node.
bool duality_failure(std::int64_t n);

}  // namespace crysalg

#endif
