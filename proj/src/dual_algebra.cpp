#include "crysalg/dual_algebra.hpp"

#include <deque>
#include <set>
#include <stdexcept>

#include "crysalg/crystal.hpp"
#include "crysalg/tensor.hpp"

namespace crysalg {

IntMat sym_block(SymGen g, std::int64_t n) {
  IntMat m = IntMat::Zero(n + 1, n + 1);
  switch (g) {
    case SymGen::e:  // sum_b hat(b (x) (e b)^): entries (p, p-1)
      for (std::int64_t p = 1; p <= n; ++p) m(p, p - 1) = 1;
      break;
    case SymGen::f:  // sum_b hat(b (x) (f b)^): entries (p, p+1)
      for (std::int64_t p = 0; p < n; ++p) m(p, p + 1) = 1;
      break;
    case SymGen::wt:
      for (std::int64_t p = 0; p <= n; ++p) m(p, p) = n - 2 * p;
      break;
  }
  return m;
}

IntMat DualElem::block(std::int64_t n) const {
  if (!tail) {
    auto it = blocks.find(n);
    return it == blocks.end() ? IntMat::Zero(n + 1, n + 1) : it->second;
  }
  IntMat out = IntMat::Zero(n + 1, n + 1);
  for (const auto& term : *tail) {
    IntMat prod = IntMat::Identity(n + 1, n + 1);
    for (SymGen g : term.word) prod = prod * sym_block(g, n);
    out += term.coeff * prod;
  }
  return out;
}

DualElem dual_zero() { return {}; }

DualElem dual_unit() {
  DualElem u;
  u.tail = std::vector<DualElem::TailTerm>{{1, {}}};
  return u;
}

DualElem unit_1(std::int64_t alpha) {
  DualElem u;
  u.blocks[alpha] = IntMat::Identity(alpha + 1, alpha + 1);
  return u;
}

DualElem unit_sum(std::int64_t cutoff) {
  DualElem u;
  for (std::int64_t n = 0; n <= cutoff; ++n) u.blocks[n] = IntMat::Identity(n + 1, n + 1);
  return u;
}

DualElem hat_elem(const BasisPair& p) {
  DualElem u;
  IntMat m = IntMat::Zero(p.alpha + 1, p.alpha + 1);
  m(p.b.i, p.bd.i) = 1;
  u.blocks[p.alpha] = m;
  return u;
}

static void drop_zero_blocks(DualElem& x) {
  std::erase_if(x.blocks, [](const auto& e) { return e.second.cwiseAbs().sum() == 0; });
}

DualElem dual_add(const DualElem& x, const DualElem& y) {
  if (x.finite() && y.finite()) {
    DualElem out = x;
    for (const auto& [n, m] : y.blocks) {
      auto [it, fresh] = out.blocks.try_emplace(n, m);
      if (!fresh) it->second += m;
    }
    drop_zero_blocks(out);
    return out;
  }
  if (!x.finite() && !y.finite()) {
    DualElem out;
    out.tail = *x.tail;
    out.tail->insert(out.tail->end(), y.tail->begin(), y.tail->end());
    return out;
  }
  throw std::invalid_argument("dual_add: cannot mix finite and formal-sum elements");
}

DualElem dual_scale(const DualElem& x, std::int64_t s) {
  DualElem out = x;
  if (out.tail)
    for (auto& t : *out.tail) t.coeff *= s;
  for (auto& [n, m] : out.blocks) m *= s;
  if (out.finite()) drop_zero_blocks(out);
  return out;
}

DualElem dual_mul(const DualElem& x, const DualElem& y) {
  if (!x.finite() && !y.finite()) {
    DualElem out;
    out.tail = std::vector<DualElem::TailTerm>{};
    for (const auto& tx : *x.tail)
      for (const auto& ty : *y.tail) {
        DualElem::TailTerm t;
        t.coeff = tx.coeff * ty.coeff;
        t.word = tx.word;
        t.word.insert(t.word.end(), ty.word.begin(), ty.word.end());
        out.tail->push_back(std::move(t));
      }
    return out;
  }
  // at least one factor has finite support; so does the product
  DualElem out;
  const auto& finite_side = x.finite() ? x : y;
  for (const auto& [n, m] : finite_side.blocks) {
    IntMat prod = x.block(n) * y.block(n);
    if (prod.cwiseAbs().sum() != 0) out.blocks[n] = std::move(prod);
  }
  return out;
}

KashiwaraElements kashiwara_elements(std::int64_t cutoff) {
  KashiwaraElements k;
  k.e_tilde.tail = std::vector<DualElem::TailTerm>{{1, {SymGen::e}}};
  k.f_tilde.tail = std::vector<DualElem::TailTerm>{{1, {SymGen::f}}};
  k.wt.tail = std::vector<DualElem::TailTerm>{{1, {SymGen::wt}}};
  for (std::int64_t n = 0; n <= cutoff; ++n) {
    k.e_tilde.blocks[n] = sym_block(SymGen::e, n);
    k.f_tilde.blocks[n] = sym_block(SymGen::f, n);
    k.wt.blocks[n] = sym_block(SymGen::wt, n);
  }
  return k;
}

std::vector<std::string> relation_check(std::int64_t cutoff) {
  std::vector<std::string> issues;
  const KashiwaraElements k = kashiwara_elements(cutoff);
  const DualElem com_e =
      dual_add(dual_mul(k.e_tilde, k.wt), dual_scale(dual_mul(k.wt, k.e_tilde), -1));
  const DualElem com_f =
      dual_add(dual_mul(k.f_tilde, k.wt), dual_scale(dual_mul(k.wt, k.f_tilde), -1));
  for (std::int64_t n = 0; n <= cutoff; ++n) {
    if (!mat_eq(com_e.block(n), 2 * k.e_tilde.block(n)))
      issues.push_back("[e,wt] != 2e on block " + std::to_string(n));
    if (!mat_eq(com_f.block(n), -2 * k.f_tilde.block(n)))
      issues.push_back("[f,wt] != -2f on block " + std::to_string(n));
    const IntMat w = k.wt.block(n);
    if (!mat_eq(w * w - w * w, IntMat::Zero(n + 1, n + 1)))
      issues.push_back("[wt,wt] != 0 on block " + std::to_string(n));
  }
  // words x in the free monoid on e, f act by x(b (x) b') = delta_{x b, b'^}
  for (std::int64_t len = 1; len <= 4; ++len)
    for (std::int64_t code = 0; code < (std::int64_t(1) << len); ++code) {
      std::vector<SymGen> word;
      for (std::int64_t p = 0; p < len; ++p)
        word.push_back((code >> p) & 1 ? SymGen::f : SymGen::e);
      for (std::int64_t n = 0; n <= cutoff; ++n) {
        // the element of the word: product of the generators, rightmost
        // letter applied first to the crystal, so the matrices multiply in
        // reverse order
        IntMat elem = IntMat::Identity(n + 1, n + 1);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
          elem = elem * sym_block(*it, n);
        // operator route: apply the word to each node
        IntMat table = IntMat::Zero(n + 1, n + 1);
        for (std::int64_t b = 0; b <= n; ++b) {
          Mono v{b, n - b};
          for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it)
            v = (*it == SymGen::e) ? v.e() : v.f();
          if (!v.is_zero()) table(b, v.i) = 1;
        }
        if (!mat_eq(elem, table)) {
          issues.push_back("word evaluation mismatch on block " + std::to_string(n));
          break;
        }
      }
    }
  return issues;
}

DualElem hw_projector(std::int64_t alpha) {
  const KashiwaraElements k = kashiwara_elements(alpha);
  const DualElem e_alpha = dual_mul(k.e_tilde, unit_1(alpha));
  const DualElem f_alpha = dual_mul(k.f_tilde, unit_1(alpha));
  const DualElem proj = dual_add(unit_1(alpha), dual_scale(dual_mul(e_alpha, f_alpha), -1));
  IntMat expect = IntMat::Zero(alpha + 1, alpha + 1);
  expect(0, 0) = 1;  // hat(b_alpha (x) b_alpha^)
  if (!mat_eq(proj.block(alpha), expect))
    throw std::logic_error("hw_projector: product is not the highest-weight matrix unit");
  return proj;
}

GeneratorWord generator_word(std::int64_t alpha, const Mono& b, const Mono& bp) {
  if (b.deg() != alpha || bp.deg() != alpha)
    throw std::invalid_argument("generator_word: nodes outside B(alpha)");
  // BFS from the highest-weight node along f edges
  const Crystal ba = build_Bn(alpha);
  auto f_distance = [&](const Mono& target) {
    std::deque<std::pair<int, std::int64_t>> queue{{0, 0}};
    std::set<int> seen{0};
    while (!queue.empty()) {
      auto [node, dist] = queue.front();
      queue.pop_front();
      if (ba.ids[node] == target.label()) return dist;
      if (int next = ba.f(0, node); next >= 0 && seen.insert(next).second)
        queue.push_back({next, dist + 1});
    }
    throw std::logic_error("generator_word: node unreachable from the highest weight");
  };
  GeneratorWord g;
  g.e_steps = f_distance(b);
  g.f_steps = f_distance(bp);
  const KashiwaraElements k = kashiwara_elements(alpha);
  DualElem value = hw_projector(alpha);
  for (std::int64_t s = 0; s < g.e_steps; ++s)
    value = dual_mul(dual_mul(k.e_tilde, unit_1(alpha)), value);
  for (std::int64_t s = 0; s < g.f_steps; ++s)
    value = dual_mul(value, dual_mul(k.f_tilde, unit_1(alpha)));
  g.value = std::move(value);
  return g;
}

IntComb<std::pair<BasisPair, BasisPair>> delta_restricted(std::int64_t beta, std::int64_t betap,
                                                          const BasisPair& hat) {
  IntComb<std::pair<BasisPair, BasisPair>> out;
  for (std::int64_t d = 0; d <= beta; ++d)
    for (std::int64_t e = 0; e <= beta; ++e)
      for (std::int64_t f = 0; f <= betap; ++f)
        for (std::int64_t g = 0; g <= betap; ++g) {
          // hat coefficients of the product through the decomposition images
          auto [g1, left] = tensor_image(Mono{d, beta - d}, Mono{f, betap - f});
          auto [g2, right] = tensor_image(Mono{e, beta - e}, Mono{g, betap - g});
          if (g1 != hat.alpha || g2 != hat.alpha) continue;
          if (!(left == hat.b && right == hat.bd)) continue;
          out.add({BasisPair{beta, Mono{d, beta - d}, Mono{e, beta - e}},
                   BasisPair{betap, Mono{f, betap - f}, Mono{g, betap - g}}},
                  1);
        }
  return out;
}

std::int64_t pairing(const BComb& x, const DualElem& u) {
  if (!u.finite()) throw std::invalid_argument("pairing: right argument must have finite support");
  std::int64_t total = 0;
  for (const auto& [p, k] : x.terms()) {
    auto it = u.blocks.find(p.alpha);
    if (it != u.blocks.end()) total += k * it->second(p.b.i, p.bd.i);
  }
  return total;
}

UModule module_from_comodule(const LinComodule& c) {
  auto issues = check_comodule(c);
  if (!issues.empty())
    throw std::invalid_argument("module_from_comodule: invalid comodule: " + issues.front());
  return {c.rank, c.ops};
}

LinComodule comodule_from_module(const UModule& m) {
  LinComodule c{m.rank, m.act};
  auto issues = check_comodule(c);
  if (!issues.empty())
    throw std::invalid_argument("comodule_from_module: not in the finite-support category: " +
                                issues.front());
  return c;
}

bool unital_check(const UModule& m) {
  IntMat total = IntMat::Zero(m.rank, m.rank);
  std::set<std::int64_t> blocks;
  for (const auto& [k, mat] : m.act) blocks.insert(k.alpha);
  for (std::int64_t alpha : blocks)
    for (std::int64_t b = 0; b <= alpha; ++b) {
      auto it = m.act.find({alpha, Mono{b, alpha - b}, Mono{b, alpha - b}});
      if (it != m.act.end()) total += it->second;
    }
  return mat_eq(total, IntMat::Identity(m.rank, m.rank));
}

}  // namespace crysalg
