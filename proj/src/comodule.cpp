#include "crysalg/comodule.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "crysalg/tensor.hpp"

namespace crysalg {

bool mat_eq(const IntMat& a, const IntMat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().sum() == 0;
}

IntMat LinComodule::op(const OpKey& k) const {
  auto it = ops.find(k);
  if (it != ops.end()) return it->second;
  return IntMat::Zero(rank, rank);
}

static std::string key_str(const OpKey& k) {
  return "A^" + std::to_string(k.alpha) + "_{" + k.b.label() + "," + k.bp.label() + "}";
}

std::vector<std::string> check_comodule(const LinComodule& m) {
  std::vector<std::string> issues;
  for (const auto& [k, mat] : m.ops) {
    if (mat.rows() != m.rank || mat.cols() != m.rank)
      issues.push_back(key_str(k) + " has wrong shape");
    if (k.b.deg() != k.alpha || k.bp.deg() != k.alpha)
      issues.push_back(key_str(k) + " indexes nodes outside B(alpha)");
  }
  if (!issues.empty()) return issues;

  std::set<std::int64_t> blocks;
  for (const auto& [k, mat] : m.ops) blocks.insert(k.alpha);

  // same-block relation: A_{d,d'} A_{b,b'} = delta_{d,b'} A_{b,d'}
  for (std::int64_t alpha : blocks)
    for (std::int64_t b = 0; b <= alpha; ++b)
      for (std::int64_t bp = 0; bp <= alpha; ++bp)
        for (std::int64_t d = 0; d <= alpha; ++d)
          for (std::int64_t dp = 0; dp <= alpha; ++dp) {
            const OpKey k1{alpha, Mono{d, alpha - d}, Mono{dp, alpha - dp}};
            const OpKey k2{alpha, Mono{b, alpha - b}, Mono{bp, alpha - bp}};
            const IntMat lhs = m.op(k1) * m.op(k2);
            const IntMat rhs = (d == bp)
                                   ? m.op({alpha, Mono{b, alpha - b}, Mono{dp, alpha - dp}})
                                   : IntMat::Zero(m.rank, m.rank);
            if (!mat_eq(lhs, rhs)) {
              issues.push_back("relation fails: " + key_str(k1) + " " + key_str(k2));
              if (issues.size() > 8) return issues;
            }
          }
  // cross-block products of present operators must vanish
  for (const auto& [k1, m1] : m.ops)
    for (const auto& [k2, m2] : m.ops)
      if (k1.alpha != k2.alpha && (m1 * m2).cwiseAbs().sum() != 0)
        issues.push_back("cross-block product nonzero: " + key_str(k1) + " " + key_str(k2));

  // sum of the diagonal idempotents is the identity
  IntMat total = IntMat::Zero(m.rank, m.rank);
  for (std::int64_t alpha : blocks)
    for (std::int64_t b = 0; b <= alpha; ++b)
      total += m.op({alpha, Mono{b, alpha - b}, Mono{b, alpha - b}});
  if (!mat_eq(total, IntMat::Identity(m.rank, m.rank)))
    issues.push_back("sum of A_{b,b} is not the identity");
  return issues;
}

LinComodule standard_comodule(std::int64_t alpha) {
  LinComodule m;
  m.rank = alpha + 1;
  for (std::int64_t b = 0; b <= alpha; ++b)
    for (std::int64_t bp = 0; bp <= alpha; ++bp) {
      IntMat mat = IntMat::Zero(m.rank, m.rank);
      mat(bp, b) = 1;  // maps e_b to e_b'
      m.ops[{alpha, Mono{b, alpha - b}, Mono{bp, alpha - bp}}] = mat;
    }
  return m;
}

LinComodule direct_sum(const LinComodule& a, const LinComodule& b) {
  LinComodule s;
  s.rank = a.rank + b.rank;
  std::set<OpKey> keys;
  for (const auto& [k, mat] : a.ops) keys.insert(k);
  for (const auto& [k, mat] : b.ops) keys.insert(k);
  for (const OpKey& k : keys) {
    IntMat mat = IntMat::Zero(s.rank, s.rank);
    mat.topLeftCorner(a.rank, a.rank) = a.op(k);
    mat.bottomRightCorner(b.rank, b.rank) = b.op(k);
    s.ops[k] = mat;
  }
  return s;
}

LinComodule coaction_to_operators(
    std::int64_t rank, const std::vector<IntComb<std::pair<BasisPair, int>>>& table) {
  if (static_cast<std::int64_t>(table.size()) != rank)
    throw std::invalid_argument("coaction_to_operators: table length != rank");
  LinComodule m;
  m.rank = rank;
  for (std::int64_t v = 0; v < rank; ++v)
    for (const auto& [term, coeff] : table[v].terms()) {
      const auto& [pair, w] = term;
      if (w < 0 || w >= rank)
        throw std::invalid_argument("coaction_to_operators: basis index out of range");
      auto [it, fresh] =
          m.ops.try_emplace(OpKey{pair.alpha, pair.b, pair.bd}, IntMat::Zero(rank, rank));
      it->second(w, v) += coeff;
    }
  std::erase_if(m.ops, [](const auto& e) { return e.second.cwiseAbs().sum() == 0; });
  auto issues = check_comodule(m);
  if (!issues.empty())
    throw std::invalid_argument("coaction_to_operators: not a comodule: " + issues.front());
  return m;
}

IntMat column_lattice_basis(const IntMat& a) {
  IntMat h = a;
  const std::int64_t rows = h.rows();
  std::int64_t cols = h.cols();
  std::int64_t pivot_col = 0;
  for (std::int64_t row = 0; row < rows && pivot_col < cols; ++row) {
    // clear the row to a single nonnegative pivot using column operations
    while (true) {
      std::int64_t j = -1;
      for (std::int64_t k = pivot_col; k < cols; ++k)
        if (h(row, k) != 0 && (j < 0 || std::abs(h(row, k)) < std::abs(h(row, j)))) j = k;
      if (j < 0) break;
      h.col(pivot_col).swap(h.col(j));
      bool cleared = true;
      for (std::int64_t k = pivot_col + 1; k < cols; ++k)
        if (h(row, k) != 0) {
          const std::int64_t q = h(row, k) / h(row, pivot_col);
          h.col(k) -= q * h.col(pivot_col);
          if (h(row, k) != 0) cleared = false;
        }
      if (cleared) break;
    }
    if (pivot_col < cols && h(row, pivot_col) != 0) {
      if (h(row, pivot_col) < 0) h.col(pivot_col) = -h.col(pivot_col);
      ++pivot_col;
    }
  }
  return h.leftCols(pivot_col);
}

Classification classify(const LinComodule& m) {
  auto issues = check_comodule(m);
  if (!issues.empty()) throw std::invalid_argument("classify: not a comodule: " + issues.front());
  Classification out;
  std::set<std::int64_t> blocks;
  for (const auto& [k, mat] : m.ops)
    if (mat.cwiseAbs().sum() != 0) blocks.insert(k.alpha);

  std::vector<IntVec> image_columns;
  for (std::int64_t alpha : blocks) {
    const Mono anchor = Mono::hw(alpha);
    const IntMat proj = m.op({alpha, anchor, anchor});
    const IntMat basis = column_lattice_basis(proj);
    const std::int64_t r = basis.cols();
    // the transport bijections force equal ranks across the block
    for (std::int64_t b = 0; b <= alpha; ++b) {
      const Mono node{b, alpha - b};
      const IntMat pb = m.op({alpha, node, node});
      if (column_lattice_basis(pb).cols() != r)
        throw std::invalid_argument("classify: rank mismatch across block " +
                                    std::to_string(alpha));
    }
    if (r == 0) continue;
    out.multiplicity[alpha] = r;
    for (std::int64_t k = 0; k < r; ++k)
      for (std::int64_t b = 0; b <= alpha; ++b) {
        out.columns.emplace_back(alpha, b, k);
        image_columns.push_back(m.op({alpha, anchor, Mono{b, alpha - b}}) * basis.col(k));
      }
  }
  out.iso = IntMat::Zero(m.rank, static_cast<std::int64_t>(image_columns.size()));
  for (std::size_t c = 0; c < image_columns.size(); ++c) out.iso.col(c) = image_columns[c];

  if (out.iso.cols() != m.rank)
    throw std::invalid_argument("classify: transported basis has wrong cardinality");
  // the transported family must be a Z-basis: its column lattice is Z^rank
  IntMat h = column_lattice_basis(out.iso);
  if (!mat_eq(h, IntMat::Identity(m.rank, m.rank)))
    throw std::invalid_argument("classify: transported family is not a Z-basis");

  // the isomorphism intertwines the coactions
  for (std::size_t c = 0; c < out.columns.size(); ++c) {
    auto [alpha, b, k] = out.columns[c];
    const Mono node{b, alpha - b};
    for (const auto& [key, mat] : m.ops) {
      IntVec got = mat * out.iso.col(c);
      IntVec expect = IntVec::Zero(m.rank);
      if (key.alpha == alpha && key.b == node) {
        const std::int64_t bp = key.bp.i;
        for (std::size_t c2 = 0; c2 < out.columns.size(); ++c2)
          if (out.columns[c2] == std::tuple{alpha, bp, k}) expect = out.iso.col(c2);
      }
      if ((got - expect).cwiseAbs().sum() != 0)
        throw std::invalid_argument("classify: isomorphism does not intertwine coactions");
    }
  }
  return out;
}

std::vector<std::string> check_based(const BasedComodule& bm) {
  std::vector<std::string> issues = check_comodule(bm.m);
  if (static_cast<std::int64_t>(bm.cls.size()) != bm.m.rank) {
    issues.push_back("partition has wrong length");
    return issues;
  }
  for (std::int64_t v = 0; v < bm.m.rank; ++v) {
    auto [alpha, node] = bm.cls[v];
    IntVec e = IntVec::Zero(bm.m.rank);
    e(v) = 1;
    if ((bm.m.op({alpha, node, node}) * e - e).cwiseAbs().sum() != 0)
      issues.push_back("basis vector " + std::to_string(v) + " is not fixed by its idempotent");
  }
  // every operator restricts to a bijection X_b -> X_b'
  std::set<std::int64_t> blocks;
  for (const auto& [k, mat] : bm.m.ops) blocks.insert(k.alpha);
  for (std::int64_t alpha : blocks)
    for (std::int64_t b = 0; b <= alpha; ++b)
      for (std::int64_t bp = 0; bp <= alpha; ++bp) {
        const IntMat mat = bm.m.op({alpha, Mono{b, alpha - b}, Mono{bp, alpha - bp}});
        std::set<std::int64_t> image;
        for (std::int64_t v = 0; v < bm.m.rank; ++v) {
          if (bm.cls[v] != std::pair{alpha, Mono{b, alpha - b}}) continue;
          IntVec col = mat.col(v);
          std::int64_t target = -1;
          for (std::int64_t w = 0; w < bm.m.rank; ++w) {
            if (col(w) == 0) continue;
            if (col(w) != 1 || target >= 0 ||
                bm.cls[w] != std::pair{alpha, Mono{bp, alpha - bp}}) {
              target = -2;
              break;
            }
            target = w;
          }
          if (target < 0) {
            issues.push_back(key_str({alpha, Mono{b, alpha - b}, Mono{bp, alpha - bp}}) +
                             " does not map basis to basis");
            break;
          }
          if (!image.insert(target).second) {
            issues.push_back(key_str({alpha, Mono{b, alpha - b}, Mono{bp, alpha - bp}}) +
                             " is not injective on the basis");
            break;
          }
        }
      }
  return issues;
}

BasedComodule crystal_to_based(const Crystal& x) {
  BasedComodule bm;
  bm.m.rank = static_cast<std::int64_t>(x.size());
  bm.cls.resize(x.size());
  bm.labels = x.ids;
  for (const auto& part : decompose(x).parts) {
    if (!part.cls) throw std::invalid_argument("crystal_to_based: not an sl2 crystal");
    const Sl2Class& cls = *part.cls;
    if (cls.lambda != cls.n)
      throw std::invalid_argument("crystal_to_based: component " + x.ids[part.view.hw_node] +
                                  " is not isomorphic to any B(alpha)");
    const std::int64_t alpha = cls.n;
    for (std::int64_t b = 0; b <= alpha; ++b) bm.cls[cls.chain[b]] = {alpha, Mono{b, alpha - b}};
    for (std::int64_t b = 0; b <= alpha; ++b)
      for (std::int64_t bp = 0; bp <= alpha; ++bp) {
        auto [it, fresh] = bm.m.ops.try_emplace(
            OpKey{alpha, Mono{b, alpha - b}, Mono{bp, alpha - bp}},
            IntMat::Zero(bm.m.rank, bm.m.rank));
        it->second(cls.chain[bp], cls.chain[b]) = 1;
      }
  }
  return bm;
}

Crystal based_to_crystal(const BasedComodule& bm) {
  auto issues = check_based(bm);
  if (!issues.empty())
    throw std::invalid_argument("based_to_crystal: invalid based comodule: " + issues.front());
  Crystal c;
  c.cartan = CartanDatum::sl2();
  c.fedge.resize(1);
  c.eedge.resize(1);
  for (std::int64_t v = 0; v < bm.m.rank; ++v) {
    auto [alpha, node] = bm.cls[v];
    const std::string id =
        v < static_cast<std::int64_t>(bm.labels.size()) ? bm.labels[v] : "e" + std::to_string(v);
    c.add_node(id, Weight::sl2(node.wt()), {ExtInt(node.eps())}, {ExtInt(node.phi())});
  }
  for (std::int64_t v = 0; v < bm.m.rank; ++v) {
    auto [alpha, node] = bm.cls[v];
    const Mono fnode = node.f();
    if (fnode.is_zero()) continue;
    const IntMat mat = bm.m.op({alpha, node, fnode});
    for (std::int64_t w = 0; w < bm.m.rank; ++w)
      if (mat(w, v) != 0) c.add_edge(0, static_cast<int>(v), static_cast<int>(w));
  }
  auto crystal_issues = validate(c);
  if (!crystal_issues.empty())
    throw std::logic_error("based_to_crystal: output fails validation: " +
                           crystal_issues.front().axiom);
  return c;
}

BasedComodule based_tensor(const BasedComodule& a, const BasedComodule& b) {
  BasedComodule t;
  t.m.rank = a.m.rank * b.m.rank;
  for (const auto& [ka, mata] : a.m.ops)
    for (const auto& [kb, matb] : b.m.ops) {
      auto prod = smul(BasisPair{ka.alpha, ka.b, ka.bp}, BasisPair{kb.alpha, kb.b, kb.bp});
      if (!prod) continue;
      auto [it, fresh] = t.m.ops.try_emplace(OpKey{prod->alpha, prod->b, prod->bd},
                                             IntMat::Zero(t.m.rank, t.m.rank));
      // Kronecker product on the product basis (i, j) -> i * rank(b) + j
      for (std::int64_t i = 0; i < a.m.rank; ++i)
        for (std::int64_t ip = 0; ip < a.m.rank; ++ip) {
          if (mata(ip, i) == 0) continue;
          for (std::int64_t j = 0; j < b.m.rank; ++j)
            for (std::int64_t jp = 0; jp < b.m.rank; ++jp)
              it->second(ip * b.m.rank + jp, i * b.m.rank + j) += mata(ip, i) * matb(jp, j);
        }
    }
  std::erase_if(t.m.ops, [](const auto& e) { return e.second.cwiseAbs().sum() == 0; });
  // read the partition off the diagonal idempotents
  t.cls.resize(t.m.rank);
  std::vector<bool> assigned(t.m.rank, false);
  for (const auto& [k, mat] : t.m.ops) {
    if (!(k.b == k.bp)) continue;
    for (std::int64_t v = 0; v < t.m.rank; ++v)
      if (mat(v, v) == 1) {
        t.cls[v] = {k.alpha, k.b};
        assigned[v] = true;
      }
  }
  for (bool ok : assigned)
    if (!ok) throw std::logic_error("based_tensor: basis vector without a partition class");
  for (std::int64_t i = 0; i < a.m.rank; ++i)
    for (std::int64_t j = 0; j < b.m.rank; ++j) {
      const std::string la =
          i < static_cast<std::int64_t>(a.labels.size()) ? a.labels[i] : "e" + std::to_string(i);
      const std::string lb =
          j < static_cast<std::int64_t>(b.labels.size()) ? b.labels[j] : "e" + std::to_string(j);
      t.labels.push_back(la + "⊗" + lb);
    }
  return t;
}

bool compatibility_check(const LinComodule& m, const SetComodule& setc) {
  if (static_cast<std::int64_t>(setc.carrier.size()) != m.rank) return false;
  if (!check_comodule(m).empty()) return false;
  if (!verify_comodule(setc).empty()) return false;
  for (std::int64_t v = 0; v < m.rank; ++v) {
    if (!setc.coaction[v]) return false;
    const auto& [pair, tail] = *setc.coaction[v];
    IntVec e = IntVec::Zero(m.rank), et = IntVec::Zero(m.rank);
    e(v) = 1;
    et(tail) = 1;
    // A^alpha_{b,b'}(x) = x' and x lies in X^alpha_b
    if ((m.op({pair.alpha, pair.b, pair.bd}) * e - et).cwiseAbs().sum() != 0) return false;
    if ((m.op({pair.alpha, pair.b, pair.b}) * e - e).cwiseAbs().sum() != 0) return false;
  }
  return true;
}

bool s_diagram_check(std::int64_t alpha, bool use_S) {
  for (std::int64_t b = 0; b <= alpha; ++b)
    for (std::int64_t bp = 0; bp <= alpha; ++bp) {
      const Mono mb{b, alpha - b}, mbp{bp, alpha - bp};
      // left leg: (id (x) eps)(Delta_{B(alpha)} (x) id), then S
      BComb left;
      for (std::int64_t c = 0; c <= alpha; ++c) {
        const Mono mc{c, alpha - c};
        left.add({alpha, mb, mc}, eval_pair(Side::right, mc, mbp));
      }
      BComb left_final = use_S ? s_linear(left) : left;
      // right leg: (id (x) tau)(eps (x) id)(id (x) Delta_{B(-alpha)})
      BComb right;
      for (std::int64_t d = 0; d <= alpha; ++d) {
        const Mono md{d, alpha - d};
        right.add({alpha, mbp.flip(), md}, eval_pair(Side::right, mb, md.flip()));
      }
      if (!(left_final == right)) return false;
    }
  return true;
}

}  // namespace crysalg
