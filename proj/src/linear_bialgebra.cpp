#include "crysalg/linear_bialgebra.hpp"

#include <stdexcept>
#include <tuple>

#include "crysalg/crystal.hpp"

namespace crysalg {

BComb bb_unit() { return BComb::basis(sunit()); }

BComb bb_mul(const BComb& x, const BComb& y) {
  BComb out;
  for (const auto& [p, kp] : x.terms())
    for (const auto& [q, kq] : y.terms())
      if (auto prod = smul(p, q)) out.add(*prod, kp * kq);
  return out;
}

BPairComb bb_delta(const BComb& x) {
  BPairComb out;
  for (const auto& [p, k] : x.terms())
    for (std::int64_t c = 0; c <= p.alpha; ++c) {
      const Mono mid{c, p.alpha - c};
      out.add({BasisPair{p.alpha, p.b, mid}, BasisPair{p.alpha, mid, p.bd}}, k);
    }
  return out;
}

std::int64_t bb_counit(const BComb& x) {
  std::int64_t s = 0;
  for (const auto& [p, k] : x.terms())
    if (p.b == p.bd) s += k;
  return s;
}

IntComb<std::pair<Mono, Mono>> coeval(std::int64_t alpha, Side side) {
  (void)side;  // the diagonal sum reads the same in undualized storage
  IntComb<std::pair<Mono, Mono>> out;
  for (std::int64_t c = 0; c <= alpha; ++c) {
    const Mono m{c, alpha - c};
    out.add({m, m}, 1);
  }
  return out;
}

std::int64_t eval_pair(Side side, const Mono& first, const Mono& second) {
  if (first.deg() != second.deg()) throw std::invalid_argument("eval_pair: block mismatch");
  (void)side;  // both evaluations are delta on undualized slots
  return first == second ? 1 : 0;
}

bool zigzag_check(std::int64_t alpha) {
  for (std::int64_t i = 0; i <= alpha; ++i) {
    const Mono b{i, alpha - i};
    // (eps (x) id) o (id (x) iota): b -> sum_c eps(b (x) c^) c
    IntComb<Mono> r1;
    for (const auto& [pair, k] : coeval(alpha, Side::left).terms())
      r1.add(pair.second, k * eval_pair(Side::right, b, pair.first));
    // (id (x) eps') o (iota' (x) id): b -> sum_c c eps'(c^ (x) b)
    IntComb<Mono> r2;
    for (const auto& [pair, k] : coeval(alpha, Side::right).terms())
      r2.add(pair.first, k * eval_pair(Side::left, pair.second, b));
    if (!(r1 == IntComb<Mono>::basis(b) && r2 == IntComb<Mono>::basis(b))) return false;
  }
  return true;
}

bool zigzag_check_corrupted(std::int64_t alpha) {
  for (std::int64_t i = 0; i <= alpha; ++i) {
    const Mono b{i, alpha - i};
    IntComb<Mono> r1;
    auto co = coeval(alpha, Side::left);
    auto terms = co.terms();
    auto last = std::prev(terms.end());  // drop one term from the diagonal sum
    for (auto it = terms.begin(); it != last; ++it)
      r1.add(it->first.second, it->second * eval_pair(Side::right, b, it->first.first));
    if (!(r1 == IntComb<Mono>::basis(b))) return false;
  }
  return true;
}

std::int64_t degree(const BasisPair& p) { return p.b.wt() - p.bd.wt(); }

std::map<std::int64_t, BComb> grade(const BComb& x) {
  std::map<std::int64_t, BComb> out;
  for (const auto& [p, k] : x.terms()) out[degree(p)].add(p, k);
  return out;
}

BasisPair gen_elem(Gen g) {
  const Mono x{1, 0}, y{0, 1};
  switch (g) {
    case Gen::a: return {1, x, x};
    case Gen::b: return {1, y, x};
    case Gen::c: return {1, x, y};
    case Gen::d: return {1, y, y};
  }
  throw std::logic_error("gen_elem: bad generator");
}

static char gen_char(Gen g, LabelConvention conv) {
  if (conv == LabelConvention::matrix) {
    if (g == Gen::b) return 'c';
    if (g == Gen::c) return 'b';
  }
  switch (g) {
    case Gen::a: return 'a';
    case Gen::b: return 'b';
    case Gen::c: return 'c';
    case Gen::d: return 'd';
  }
  return '?';
}

Word parse_word(const std::string& s, LabelConvention conv) {
  Word w;
  for (char ch : s) {
    Gen g;
    switch (ch) {
      case 'a': g = Gen::a; break;
      case 'b': g = Gen::b; break;
      case 'c': g = Gen::c; break;
      case 'd': g = Gen::d; break;
      default: throw std::invalid_argument(std::string("parse_word: bad letter '") + ch + "'");
    }
    if (conv == LabelConvention::matrix) {
      if (g == Gen::b)
        g = Gen::c;
      else if (g == Gen::c)
        g = Gen::b;
    }
    w.push_back(g);
  }
  return w;
}

std::string word_str(const Word& w, LabelConvention conv) {
  std::string s;
  for (Gen g : w) s += gen_char(g, conv);
  return s;
}

BComb word_to_basis(const Word& w) {
  BComb acc = bb_unit();
  for (Gen g : w) acc = bb_mul(acc, BComb::basis(gen_elem(g)));
  return acc;
}

Word basis_to_normal_form(const BasisPair& p) {
  Word w;
  const std::int64_t i = p.b.i, j = p.b.j, r = p.bd.i, s = p.bd.j;
  if (i >= r) {
    w.insert(w.end(), r, Gen::a);
    w.insert(w.end(), i - r, Gen::c);
    w.insert(w.end(), j, Gen::d);
  } else {
    w.insert(w.end(), i, Gen::a);
    w.insert(w.end(), r - i, Gen::b);
    w.insert(w.end(), s, Gen::d);
  }
  return w;
}

bool fundamental_generation_check(std::int64_t alpha) {
  std::map<BasisPair, bool> hit;
  for (std::int64_t i = 0; i <= alpha; ++i)
    for (std::int64_t k = 0; k <= alpha; ++k)
      hit[{alpha, Mono{i, alpha - i}, Mono{k, alpha - k}}] = false;
  const std::size_t total = static_cast<std::size_t>(1) << (2 * alpha);  // 4^alpha words
  for (std::size_t code = 0; code < total; ++code) {
    Word w;
    std::size_t v = code;
    for (std::int64_t k = 0; k < alpha; ++k) {
      w.push_back(static_cast<Gen>(v & 3));
      v >>= 2;
    }
    const BComb r = word_to_basis(w);
    for (const auto& [p, coeff] : r.terms())
      if (p.alpha == alpha && coeff == 1) hit[p] = true;
  }
  for (const auto& [p, h] : hit)
    if (!h) return false;
  return true;
}

// Swap the slots and apply the w0 twist; on sl2 nodes the twist is the chain
// flip (it is trivial on blocks only).
BasisPair antimorphism_S(const BasisPair& p) { return {p.alpha, p.bd.flip(), p.b.flip()}; }

BComb s_linear(const BComb& x) {
  BComb out;
  for (const auto& [p, k] : x.terms()) out.add(antimorphism_S(p), k);
  return out;
}

// --- the V functor at desk scale ------------------------------------------
//
// Basis of V^(k+1)(A): labels (alpha, b, c, t) standing for b (x) e_{c,t}
// where e_{c,t} picks the coefficient of c and lands on basis element t of
// V^k(A); level 0 is A itself with basis 0..rank-1.

namespace {

struct VLevel {
  std::vector<std::tuple<std::int64_t, Mono, Mono, int>> labels;
  std::map<std::tuple<std::int64_t, Mono, Mono, int>, int> index;

  int find(std::int64_t alpha, const Mono& b, const Mono& c, int t) const {
    return index.at({alpha, b, c, t});
  }
};

VLevel build_level(std::int64_t cutoff, int lower_rank) {
  VLevel level;
  for (std::int64_t alpha = 0; alpha <= cutoff; ++alpha)
    for (std::int64_t i = 0; i <= alpha; ++i)
      for (std::int64_t k = 0; k <= alpha; ++k)
        for (int t = 0; t < lower_rank; ++t) {
          level.index[{alpha, Mono{i, alpha - i}, Mono{k, alpha - k}, t}] =
              static_cast<int>(level.labels.size());
          level.labels.emplace_back(alpha, Mono{i, alpha - i}, Mono{k, alpha - k}, t);
        }
  return level;
}

using Vec = std::map<int, std::int64_t>;

// Delta_V on a basis element of level `from`, landing in level `from+1`.
Vec delta_level(const VLevel& from, const VLevel& to, int t) {
  const auto& [alpha, b, c, low] = from.labels[t];
  Vec out;
  for (std::int64_t v = 0; v <= alpha; ++v) {
    const Mono mv{v, alpha - v};
    out[to.find(alpha, b, mv, from.find(alpha, mv, c, low))] += 1;
  }
  return out;
}

// V(g) for a linear map g between levels, applied to a basis element of
// `src`; g maps src-level basis to vectors in dst-level.
Vec apply_Vg(const VLevel& src, const VLevel& vsrc, const VLevel& vdst,
             const std::vector<Vec>& g, int t) {
  const auto& [alpha, b, c, low] = vsrc.labels[t];
  (void)src;
  Vec out;
  for (const auto& [target, coeff] : g[low]) out[vdst.find(alpha, b, c, target)] += coeff;
  return out;
}

}  // namespace

bool v_functor_check(std::int64_t cutoff, std::int64_t rank) {
  if (cutoff > 1 || rank > 2)
    throw GuardExceeded("v_functor_check: cutoff <= 1 and rank <= 2 only");
  const VLevel l1 = build_level(cutoff, static_cast<int>(rank));
  const VLevel l2 = build_level(cutoff, static_cast<int>(l1.labels.size()));
  const VLevel l3 = build_level(cutoff, static_cast<int>(l2.labels.size()));

  // the identification B (x) A = sum B(alpha) (x) Hom(B(alpha), A): the map
  // b (x) b' (x) a -> b (x) [x -> eps(x (x) b') a] sends basis to basis
  std::size_t bb_rank = 0;
  for (std::int64_t alpha = 0; alpha <= cutoff; ++alpha)
    bb_rank += static_cast<std::size_t>((alpha + 1) * (alpha + 1)) * rank;
  if (bb_rank != l1.labels.size()) return false;

  // coassociativity: Delta_{V(A)} o Delta_A = V(Delta_A) o Delta_A
  std::vector<Vec> delta1(l1.labels.size());
  for (std::size_t t = 0; t < l1.labels.size(); ++t)
    delta1[t] = delta_level(l1, l2, static_cast<int>(t));
  for (std::size_t t = 0; t < l1.labels.size(); ++t) {
    Vec lhs, rhs;
    for (const auto& [mid, k] : delta1[t]) {
      for (const auto& [tgt, k2] : delta_level(l2, l3, mid)) lhs[tgt] += k * k2;
      for (const auto& [tgt, k2] : apply_Vg(l1, l2, l3, delta1, mid)) rhs[tgt] += k * k2;
    }
    std::erase_if(lhs, [](const auto& e) { return e.second == 0; });
    std::erase_if(rhs, [](const auto& e) { return e.second == 0; });
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace crysalg
