#include <doctest.h>

#include <set>

#include "crysalg/dual_algebra.hpp"
#include "crysalg/set_bialgebra.hpp"

using namespace crysalg;

namespace {
const Mono X{1, 0};
const Mono Y{0, 1};

// row-read action of a finite element on a block basis vector
IntVec act_on(const DualElem& u, std::int64_t alpha, std::int64_t node) {
  const IntMat m = u.block(alpha);
  IntVec out = IntVec::Zero(alpha + 1);
  for (std::int64_t w = 0; w <= alpha; ++w) out(w) = m(node, w);
  return out;
}
}  // namespace

TEST_CASE("Kashiwara element blocks") {
  KashiwaraElements k = kashiwara_elements(4);
  // block 1: f moves y to x, so its matrix unit sits at (y, x)
  IntMat f1(2, 2);
  f1 << 0, 1, 0, 0;
  CHECK(mat_eq(k.f_tilde.block(1), f1));
  IntMat e1(2, 2);
  e1 << 0, 0, 1, 0;
  CHECK(mat_eq(k.e_tilde.block(1), e1));

  IntMat w2 = IntMat::Zero(3, 3);
  w2(0, 0) = 2;
  w2(1, 1) = 0;
  w2(2, 2) = -2;
  CHECK(mat_eq(k.wt.block(2), w2));  // diag(2, 0, -2) in node order y^2, xy, x^2

  // hat(d (x) d') . b = delta_{d,b} d', and the Kashiwara elements act as usual
  for (std::int64_t n = 1; n <= 3; ++n)
    for (std::int64_t p = 0; p <= n; ++p) {
      IntVec fv = act_on(k.f_tilde, n, p);
      for (std::int64_t w = 0; w <= n; ++w) CHECK(fv(w) == (p < n && w == p + 1 ? 1 : 0));
      IntVec ev = act_on(k.e_tilde, n, p);
      for (std::int64_t w = 0; w <= n; ++w) CHECK(ev(w) == (p > 0 && w == p - 1 ? 1 : 0));
    }
}

TEST_CASE("dual multiplication") {
  // hat(d (x) d') hat(b (x) b') is nonzero iff d' matches b
  DualElem p1 = dual_mul(hat_elem({1, Y, X}), hat_elem({1, X, X}));
  CHECK(mat_eq(p1.block(1), hat_elem({1, Y, X}).block(1)));
  DualElem p2 = dual_mul(hat_elem({1, Y, X}), hat_elem({1, Y, X}));
  CHECK(p2.blocks.empty());

  for (const BasisPair& p : all_belems(3)) {
    DualElem left = dual_mul(unit_1(p.alpha), hat_elem(p));
    DualElem right = dual_mul(hat_elem(p), unit_1(p.alpha));
    CHECK(mat_eq(left.block(p.alpha), hat_elem(p).block(p.alpha)));
    CHECK(mat_eq(right.block(p.alpha), hat_elem(p).block(p.alpha)));
  }

  // (sum_alpha 1_alpha) u = u = u (sum_alpha 1_alpha) for finite u
  DualElem u = dual_add(hat_elem({2, Mono{1, 1}, Mono{2, 0}}), hat_elem({1, Y, Y}));
  for (std::int64_t n = 0; n <= 2; ++n) {
    CHECK(mat_eq(dual_mul(unit_sum(2), u).block(n), u.block(n)));
    CHECK(mat_eq(dual_mul(u, unit_sum(2)).block(n), u.block(n)));
  }

  // e f - f e has diagonal entries in {-1, 0, 1}
  KashiwaraElements k = kashiwara_elements(4);
  DualElem comm = dual_add(dual_mul(k.e_tilde, k.f_tilde),
                           dual_scale(dual_mul(k.f_tilde, k.e_tilde), -1));
  for (std::int64_t n = 0; n <= 4; ++n) {
    const IntMat m = comm.block(n);
    for (std::int64_t p = 0; p <= n; ++p) {
      CHECK(m(p, p) >= -1);
      CHECK(m(p, p) <= 1);
    }
  }
}

TEST_CASE("relations") {
  CHECK(relation_check(4).empty());

  // negative control: a bumped weight diagonal breaks the commutator
  KashiwaraElements k = kashiwara_elements(2);
  DualElem bad_wt = unit_1(2);
  bad_wt.blocks[2] = k.wt.block(2);
  bad_wt.blocks[2](0, 0) += 1;
  DualElem e2 = dual_mul(k.e_tilde, unit_1(2));
  DualElem comm = dual_add(dual_mul(e2, bad_wt), dual_scale(dual_mul(bad_wt, e2), -1));
  CHECK(!mat_eq(comm.block(2), 2 * e2.block(2)));
}

TEST_CASE("highest-weight projector") {
  IntMat expect2 = IntMat::Zero(3, 3);
  expect2(0, 0) = 1;
  CHECK(mat_eq(hw_projector(2).block(2), expect2));

  CHECK(mat_eq(hw_projector(0).block(0), IntMat::Identity(1, 1)));

  CHECK(hw_projector(3).block(3).cwiseAbs().sum() == 1);  // rank-one matrix unit
}

TEST_CASE("generator words") {
  GeneratorWord g = generator_word(1, X, Y);
  CHECK(g.e_steps == 1);
  CHECK(g.f_steps == 0);
  CHECK(mat_eq(g.value.block(1), hat_elem({1, X, Y}).block(1)));

  GeneratorWord g0 = generator_word(0, Mono{0, 0}, Mono{0, 0});
  CHECK(mat_eq(g0.value.block(0), IntMat::Identity(1, 1)));

  GeneratorWord g2 = generator_word(2, Mono{1, 1}, Mono{2, 0});
  CHECK(mat_eq(g2.value.block(2), hat_elem({2, Mono{1, 1}, Mono{2, 0}}).block(2)));

  for (std::int64_t alpha = 0; alpha <= 3; ++alpha)
    for (std::int64_t b = 0; b <= alpha; ++b)
      for (std::int64_t c = 0; c <= alpha; ++c) {
        const BasisPair target{alpha, Mono{b, alpha - b}, Mono{c, alpha - c}};
        CHECK(mat_eq(generator_word(alpha, target.b, target.bd).value.block(alpha),
                     hat_elem(target).block(alpha)));
      }
}

TEST_CASE("restricted comultiplication") {
  // Delta^0_{1,1} of the unit block matrix unit: highest (x) lowest cross term
  auto d0 = delta_restricted(1, 1, sunit());
  IntComb<std::pair<BasisPair, BasisPair>> expect;
  expect.add({BasisPair{1, Y, Y}, BasisPair{1, X, X}}, 1);
  CHECK(d0 == expect);

  // Delta^alpha_{alpha,0}(hat) = hat (x) hat(b0 (x) b0)
  for (const BasisPair& p : all_belems(2)) {
    if (p.alpha != 2) continue;
    auto d = delta_restricted(2, 0, p);
    IntComb<std::pair<BasisPair, BasisPair>> e;
    e.add({p, sunit()}, 1);
    CHECK(d == e);
  }

  // brute-force double sum through smul as the oracle, and integrality
  const BasisPair target{2, Mono{0, 2}, Mono{0, 2}};
  auto got = delta_restricted(1, 1, target);
  IntComb<std::pair<BasisPair, BasisPair>> brute;
  for (const BasisPair& u : all_belems(1)) {
    if (u.alpha != 1) continue;
    for (const BasisPair& v : all_belems(1)) {
      if (v.alpha != 1) continue;
      if (smul(u, v) == target) brute.add({u, v}, 1);
    }
  }
  CHECK(got == brute);
  for (const auto& [term, k] : got.terms()) CHECK(k == 1);
}

TEST_CASE("pairing") {
  for (const BasisPair& p : all_belems(3)) {
    CHECK(pairing(BComb::basis(p), hat_elem(p)) == 1);
    for (const BasisPair& q : all_belems(3))
      if (!(p == q)) CHECK(pairing(BComb::basis(p), hat_elem(q)) == 0);
  }
  KashiwaraElements k = kashiwara_elements(2);
  CHECK_THROWS_AS(pairing(bb_unit(), k.wt), std::invalid_argument);
}

TEST_CASE("wt fails the finite-support condition as a right multiplier") {
  KashiwaraElements k = kashiwara_elements(4);
  for (std::int64_t n = 1; n <= 4; ++n) {
    DualElem prod = dual_mul(hat_elem({n, Mono::hw(n), Mono::hw(n)}), k.wt);
    CHECK(prod.block(n).cwiseAbs().sum() != 0);
  }
}

TEST_CASE("modules and comodules") {
  LinComodule c2 = standard_comodule(2);
  UModule m2 = module_from_comodule(c2);
  CHECK(unital_check(m2));
  CHECK(comodule_from_module(m2).ops == c2.ops);

  // the action of the matrix units obeys hat(d (x) d') . b = delta_{d,b} d'
  for (std::int64_t b = 0; b <= 2; ++b)
    for (std::int64_t c = 0; c <= 2; ++c) {
      const IntMat mat = m2.act.at({2, Mono{b, 2 - b}, Mono{c, 2 - c}});
      for (std::int64_t v = 0; v <= 2; ++v)
        for (std::int64_t w = 0; w <= 2; ++w)
          CHECK(mat(w, v) == ((v == b && w == c) ? 1 : 0));
    }

  UModule zero{0, {}};
  CHECK(unital_check(zero));
  CHECK(comodule_from_module(zero).rank == 0);
}

TEST_CASE("based modules reproduce the crystal structure") {
  KashiwaraElements k = kashiwara_elements(3);
  for (std::int64_t n = 0; n <= 3; ++n) {
    const Crystal bn = build_Bn(n);
    BasedComodule bm = crystal_to_based(bn);
    UModule mod = module_from_comodule(bm.m);
    // f action: sum over c of act(n, c, f c) read rowwise
    for (std::int64_t v = 0; v < bm.m.rank; ++v) {
      std::int64_t target = -1;
      for (std::int64_t c = 0; c < n; ++c) {
        auto it = mod.act.find({n, Mono{c, n - c}, Mono{c + 1, n - c - 1}});
        if (it == mod.act.end()) continue;
        for (std::int64_t w = 0; w < bm.m.rank; ++w)
          if (it->second(w, v) != 0) target = w;
      }
      CHECK(target == bn.f(0, static_cast<int>(v)));
    }
  }
  (void)k;
}
