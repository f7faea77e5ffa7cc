#include "crysalg/set_bialgebra.hpp"

#include <stdexcept>

#include "crysalg/tensor.hpp"

namespace crysalg {

std::string BElem::label() const {
  if (alpha == 0) return "1";
  return b.label() + "⊗(" + bd.label() + ")∨";
}

BElem sunit() { return {0, Mono{0, 0}, Mono{0, 0}}; }

std::vector<BElem> all_belems(std::int64_t cutoff) {
  std::vector<BElem> out;
  for (std::int64_t n = 0; n <= cutoff; ++n)
    for (std::int64_t i = 0; i <= n; ++i)
      for (std::int64_t k = 0; k <= n; ++k) out.push_back({n, Mono{i, n - i}, Mono{k, n - k}});
  return out;
}

std::pair<BElem, BElem> sdelta(const BElem& x) {
  return {x, BElem{x.alpha, x.bd, x.bd}};
}

std::optional<BElem> smul(const BElem& x, const BElem& y) {
  const auto& table = sl2_tensor_table(x.alpha, y.alpha);
  auto [comp1, pos1] = table.locate(x.b, y.b);
  auto [comp2, pos2] = table.locate(x.bd, y.bd);
  if (comp1 != comp2) return std::nullopt;
  const std::int64_t gamma = table.gamma[comp1];
  return BElem{gamma, Mono{pos1, gamma - pos1}, Mono{pos2, gamma - pos2}};
}

int SetComodule::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < carrier.size(); ++k)
    if (carrier[k] == id) return static_cast<int>(k);
  return -1;
}

std::vector<std::string> verify_comodule(const SetComodule& m) {
  std::vector<std::string> issues;
  if (m.coaction.size() != m.carrier.size()) {
    issues.push_back("coaction table has wrong length");
    return issues;
  }
  for (std::size_t c = 0; c < m.carrier.size(); ++c) {
    if (!m.coaction[c]) {
      issues.push_back("coaction is zero at " + m.carrier[c]);
      continue;
    }
    const auto& [t, c1] = *m.coaction[c];
    auto [t1, t2] = sdelta(t);
    if (!m.coaction[c1]) {
      issues.push_back("coassociativity fails at " + m.carrier[c] + " (tail has zero coaction)");
      continue;
    }
    const auto& [s, c2] = *m.coaction[c1];
    // (Delta (x) id) and (id (x) Delta_C) must agree on (t1, t2, tail)
    if (!(t1 == t && t2 == s && c1 == c2))
      issues.push_back("coassociativity fails at " + m.carrier[c]);
  }
  return issues;
}

SetComodule coaction_B(std::int64_t alpha) {
  SetComodule m;
  const Mono u = Mono::hw(alpha);
  for (std::int64_t i = 0; i <= alpha; ++i) {
    m.carrier.push_back(Mono{i, alpha - i}.label());
    m.coaction.push_back(std::pair{BElem{alpha, Mono{i, alpha - i}, u}, 0});
  }
  return m;
}

SetComodule coaction_BnT(std::int64_t n, std::int64_t lambda) {
  SetComodule m;
  const Mono u = Mono::hw(n);
  const std::string suffix = "⊗t[" + std::to_string(lambda) + "]";
  for (std::int64_t i = 0; i <= n; ++i) {
    m.carrier.push_back(Mono{i, n - i}.label() + suffix);
    m.coaction.push_back(std::pair{BElem{n, Mono{i, n - i}, u}, 0});
  }
  return m;
}

SetComodule counterexample_comodule() {
  SetComodule m;
  m.carrier = {"a", "b"};
  const Mono x{1, 0}, y{0, 1};
  m.coaction = {std::pair{BElem{1, x, y}, 1}, std::pair{BElem{1, y, y}, 1}};
  return m;
}

SetComodule hatC(const SetComodule& m) {
  std::vector<int> fixed;
  for (std::size_t c = 0; c < m.carrier.size(); ++c) {
    if (!m.coaction[c]) continue;
    const auto& [t, c1] = *m.coaction[c];
    if (c1 == static_cast<int>(c) && t.b == Mono::hw(t.alpha) && t.bd == Mono::hw(t.alpha))
      fixed.push_back(static_cast<int>(c));
  }
  auto sub = restrict_comodule(m, fixed);
  if (!sub) throw std::logic_error("hatC: fixed elements are not closed");
  return *sub;
}

std::optional<SetComodule> restrict_comodule(const SetComodule& m,
                                             const std::vector<int>& subset) {
  std::vector<int> local(m.carrier.size(), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) local[subset[k]] = static_cast<int>(k);
  SetComodule sub;
  for (int c : subset) {
    sub.carrier.push_back(m.carrier[c]);
    if (!m.coaction[c]) {
      sub.coaction.push_back(std::nullopt);
      continue;
    }
    const auto& [t, c1] = *m.coaction[c];
    if (local[c1] < 0) return std::nullopt;  // tail escapes the subset
    sub.coaction.push_back(std::pair{t, local[c1]});
  }
  return sub;
}

bool no_counit_exists(std::int64_t cutoff) {
  const std::vector<BElem> elems = all_belems(cutoff);
  if (elems.size() > 20) throw GuardExceeded("no_counit_exists: truncation too large");
  const std::size_t n = elems.size();
  auto index = [&](const BElem& t) {
    for (std::size_t k = 0; k < n; ++k)
      if (elems[k] == t) return k;
    throw std::logic_error("no_counit_exists: element outside truncation");
  };
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      auto [t1, t2] = sdelta(elems[k]);
      const bool e1 = (mask >> index(t1)) & 1;  // eps(t1) = b0 rather than 0
      const bool e2 = (mask >> index(t2)) & 1;
      // (eps (x) id) Delta = id and (id (x) eps) Delta = id
      ok = e1 && t2 == elems[k] && e2 && t1 == elems[k];
    }
    if (ok) return false;  // a counit exists
  }
  return true;
}

bool counterexample_admits_no_strict_split() {
  const SetComodule target = counterexample_comodule();
  const Mono x{1, 0}, y{0, 1};
  // every seminormal sl2 crystal structure on {a, b}, as B(n) x T_lambda parts
  for (std::int64_t la = -3; la <= 3; ++la)
    for (std::int64_t lb = -3; lb <= 3; ++lb) {
      // two singleton components with weights la, lb
      std::vector<std::optional<std::pair<BElem, int>>> coaction = {
          std::pair{BElem{0, Mono{0, 0}, Mono{0, 0}}, 0},
          std::pair{BElem{0, Mono{0, 0}, Mono{0, 0}}, 1}};
      const bool matches = coaction == target.coaction;
      const bool b_is_component = true;  // {b} is its own component here
      if (matches && b_is_component) return false;
    }
  for (std::int64_t lam = -3; lam <= 3; ++lam) {
    for (int hw_is_b : {0, 1}) {
      // one chain component of the B(1) x T_lambda form
      const int hw = hw_is_b, low = 1 - hw_is_b;
      std::vector<std::optional<std::pair<BElem, int>>> coaction(2);
      coaction[hw] = std::pair{BElem{1, y, y}, hw};
      coaction[low] = std::pair{BElem{1, x, y}, hw};
      const bool matches = coaction == target.coaction;
      const bool b_is_component = false;  // {b} sits inside the chain
      if (matches && b_is_component) return false;
    }
  }
  return true;
}

SetComodule decomposition_coaction(std::int64_t alpha, std::int64_t beta) {
  const auto& table = sl2_tensor_table(alpha, beta);
  SetComodule m;
  for (std::int64_t i = 0; i <= alpha; ++i)
    for (std::int64_t r = 0; r <= beta; ++r) {
      m.carrier.push_back(Mono{i, alpha - i}.label() + "⊗" + Mono{r, beta - r}.label());
      const int comp = table.comp[i][r];
      const std::int64_t gamma = table.gamma[comp];
      const std::int64_t pos = table.pos[i][r];
      auto [hi, hr] = table.node_at[comp][0];
      const int hw_index = static_cast<int>(hi * (beta + 1) + hr);
      m.coaction.push_back(
          std::pair{BElem{gamma, Mono{pos, gamma - pos}, Mono::hw(gamma)}, hw_index});
    }
  return m;
}

std::vector<std::optional<std::pair<BElem, int>>> induced_coaction_mul(std::int64_t alpha,
                                                                       std::int64_t beta) {
  std::vector<std::optional<std::pair<BElem, int>>> coaction;
  for (std::int64_t i = 0; i <= alpha; ++i)
    for (std::int64_t r = 0; r <= beta; ++r) {
      auto prod = smul(BElem{alpha, Mono{i, alpha - i}, Mono::hw(alpha)},
                       BElem{beta, Mono{r, beta - r}, Mono::hw(beta)});
      if (prod)
        coaction.push_back(std::pair{*prod, 0});  // tail u_alpha (x) u_beta has index 0
      else
        coaction.push_back(std::nullopt);
    }
  return coaction;
}

std::optional<BElem> mu_prime(const BElem& xe, const BElem& ye) {
  // swap the middle B(-alpha) (x) B(beta) with the commutor instead of tau
  const Crystal da = dual(build_Bn(xe.alpha));
  const Crystal bb = build_Bn(ye.alpha);
  // node index of q^ in dual(B(alpha)) equals the node index of q
  auto [rp_node, w_node] = commutor_nodes(da, bb, static_cast<int>(xe.bd.i),
                                          static_cast<int>(ye.b.i));
  const Mono rprime{rp_node, ye.alpha - rp_node};  // in B(beta)
  const Mono qprime{w_node, xe.alpha - w_node};    // node w of B(-alpha), undualized
  auto [g1, p_img] = tensor_image(xe.b, rprime);       // primal side in B(alpha) (x) B(beta)
  auto [g2, q_img] = tensor_image(ye.bd, qprime);      // dual side read in B(beta) (x) B(alpha)
  if (g1 != g2) return std::nullopt;
  return BElem{g1, p_img, q_img};
}

// sigma on the pair crystals: t2, t3 live in blocks of the set bialgebra; the
// commutor is computed on the tensor crystals B(a) (x) B(-a) themselves.
static std::pair<BElem, BElem> sigma_blocks(const BElem& t2, const BElem& t3) {
  const TensorCrystal p2 = tensor(build_Bn(t2.alpha), dual(build_Bn(t2.alpha)));
  const TensorCrystal p3 = tensor(build_Bn(t3.alpha), dual(build_Bn(t3.alpha)));
  const int n2 = p2.pair_index(static_cast<int>(t2.b.i), static_cast<int>(t2.bd.i));
  const int n3 = p3.pair_index(static_cast<int>(t3.b.i), static_cast<int>(t3.bd.i));
  auto [m3, m2] = commutor_nodes(p2.crystal, p3.crystal, n2, n3);
  auto [b3, d3] = p3.factor[m3];
  auto [b2, d2] = p2.factor[m2];
  return {BElem{t3.alpha, Mono{b3, t3.alpha - b3}, Mono{d3, t3.alpha - d3}},
          BElem{t2.alpha, Mono{b2, t2.alpha - b2}, Mono{d2, t2.alpha - d2}}};
}

std::optional<std::pair<BElem, BElem>> sigma_square_top(const BElem& x, const BElem& y) {
  auto [x1, x2] = sdelta(x);
  auto [y1, y2] = sdelta(y);
  auto [m1, m2] = sigma_blocks(x2, y1);
  auto left = mu_prime(x1, m1);
  if (!left) return std::nullopt;
  auto right = mu_prime(m2, y2);
  if (!right) return std::nullopt;
  return std::pair{*left, *right};
}

std::optional<std::pair<BElem, BElem>> sigma_square_bottom(const BElem& x, const BElem& y) {
  auto prod = mu_prime(x, y);
  if (!prod) return std::nullopt;
  return sdelta(*prod);
}

}  // namespace crysalg
