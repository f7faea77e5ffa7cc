#include <doctest.h>

#include <random>
#include <vector>

#include "crysalg/monoid.hpp"

using namespace crysalg;

static std::vector<Mono> monos_up_to(std::int64_t maxdeg) {
  std::vector<Mono> out;
  for (std::int64_t d = 0; d <= maxdeg; ++d)
    for (std::int64_t i = 0; i <= d; ++i) out.push_back({i, d - i});
  return out;
}

TEST_CASE("mu0 pinned values") {
  CHECK(mu0(Mono{2, 0}, Mono{1, 1}) == Mono{3, 1});  // x^2 . xy = x^3 y
  CHECK(!mu0(Mono{1, 1}, Mono{1, 1}));               // xy . xy = 0
  for (const Mono& m : monos_up_to(4)) {
    CHECK(mu0(Mono{0, 0}, m) == m);
    CHECK(mu0(m, Mono{0, 0}) == m);
  }
}

TEST_CASE("mu0 equals the top-component projection") {
  for (const Mono& a : monos_up_to(4))
    for (const Mono& b : monos_up_to(4))
      if (a.deg() + b.deg() <= 8) CHECK(mu0(a, b) == mu0_by_projection(a, b));
}

TEST_CASE("mu0 associativity and unit, total degree <= 6") {
  auto ms = monos_up_to(6);
  for (const Mono& a : ms)
    for (const Mono& b : ms) {
      if (a.deg() + b.deg() > 6) continue;
      for (const Mono& c : ms) {
        if (a.deg() + b.deg() + c.deg() > 6) continue;
        auto ab = mu0(a, b);
        auto bc = mu0(b, c);
        std::optional<Mono> left = ab ? mu0(*ab, c) : std::optional<Mono>{};
        std::optional<Mono> right = bc ? mu0(a, *bc) : std::optional<Mono>{};
        CHECK(left == right);
      }
    }
}

TEST_CASE("mu_q") {
  CHECK(mu_q(Mono{1, 1}, Mono{1, 2}) == QMono{-1, Mono{2, 3}});  // xy . xy^2 = q^-1 x^2 y^3
  CHECK(mu_q(Mono{2, 0}, Mono{0, 3}) == QMono{0, Mono{2, 3}});   // x^2 . y^3 = x^2 y^3

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<std::int64_t> pick(0, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const Mono a{pick(rng), pick(rng)}, b{pick(rng), pick(rng)}, c{pick(rng), pick(rng)};
    QMono ab = mu_q(a, b);
    QMono left = mu_q(ab.mono, c);
    left.qexp += ab.qexp;
    QMono bc = mu_q(b, c);
    QMono right = mu_q(a, bc.mono);
    right.qexp += bc.qexp;
    CHECK(left == right);
    CHECK(ab.mono.deg() == a.deg() + b.deg());
  }
}

TEST_CASE("dual multiplication") {
  // (y^2)^ . (xy)^ = (xy^3)^
  CHECK(dual_mu(DualMono{Mono{0, 2}}, DualMono{Mono{1, 1}}) == DualMono{Mono{1, 3}});
  // (x)^ . (y)^ = 0
  CHECK(!dual_mu(DualMono{Mono{1, 0}}, DualMono{Mono{0, 1}}));
  for (const Mono& m : monos_up_to(4)) {
    CHECK(dual_mu(DualMono{Mono{0, 0}}, DualMono{m}) == DualMono{m});
    CHECK(dual_mu(DualMono{m}, DualMono{Mono{0, 0}}) == DualMono{m});
  }
}

TEST_CASE("duality failure") {
  CHECK(duality_failure(1));
  CHECK(duality_failure(3));
  CHECK(!duality_failure(0));
}
