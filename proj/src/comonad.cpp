#include "crysalg/comonad.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "crysalg/tensor.hpp"

namespace crysalg {

PVal PVal::make_base(int i) {
  PVal v;
  v.base = i;
  return v;
}

PVal PVal::make_boxed(UVal u) {
  PVal v;
  v.boxed = std::make_shared<const UVal>(std::move(u));
  return v;
}

PVal PVal::make_pair(PVal a, PVal b) {
  if (a.is_zero() || b.is_zero()) return {};
  PVal v;
  v.pair = std::make_shared<const std::pair<PVal, PVal>>(std::move(a), std::move(b));
  return v;
}

bool pval_eq(const PVal& a, const PVal& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  if ((a.base >= 0) != (b.base >= 0)) return false;
  if (a.base >= 0) return a.base == b.base;
  if (static_cast<bool>(a.boxed) != static_cast<bool>(b.boxed)) return false;
  if (a.boxed) return uval_eq(*a.boxed, *b.boxed);
  return pval_eq(a.pair->first, b.pair->first) && pval_eq(a.pair->second, b.pair->second);
}

bool uval_eq(const UVal& a, const UVal& b) {
  if (a.block != b.block || !(a.node == b.node)) return false;
  for (std::int64_t p = 0; p <= a.block; ++p) {
    const Mono m{p, a.block - p};
    if (!pval_eq(a.f(m), b.f(m))) return false;
  }
  return true;
}

std::size_t u_size_bound(std::size_t asize, std::int64_t cutoff) {
  std::size_t total = 0;
  for (std::int64_t n = 0; n <= cutoff; ++n) {
    std::size_t maps = 1;
    for (std::int64_t p = 0; p <= n; ++p) {
      if (maps > 2000000 / (asize + 1)) return 2000001;  // saturate
      maps *= asize + 1;
    }
    total += maps;
  }
  return total;
}

// Index maps B(n) -> A + {0}, every vector over {-1..asize-1} except all -1,
// in lexicographic order.
static std::vector<std::vector<int>> nonzero_maps(std::size_t asize, std::int64_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(n + 1, -1);
  while (true) {
    bool all_zero = std::all_of(img.begin(), img.end(), [](int v) { return v < 0; });
    if (!all_zero) out.push_back(img);
    std::int64_t k = n;
    for (; k >= 0; --k) {
      if (++img[k] < static_cast<int>(asize)) break;
      img[k] = -1;
    }
    if (k < 0) break;
  }
  return out;
}

static std::function<PVal(const Mono&)> base_map(std::vector<int> img) {
  return [img = std::move(img)](const Mono& m) {
    const int v = img.at(m.i);
    return v < 0 ? PVal::make_zero() : PVal::make_base(v);
  };
}

std::vector<UVal> u_elements(std::size_t asize, std::int64_t cutoff, std::size_t guard) {
  if (u_size_bound(asize, cutoff) > guard)
    throw GuardExceeded("u_elements: enumeration bound exceeds guard");
  std::vector<UVal> out;
  for (std::int64_t n = 0; n <= cutoff; ++n)
    for (const auto& img : nonzero_maps(asize, n))
      for (std::int64_t p = 0; p <= n; ++p) out.push_back({n, Mono{p, n - p}, base_map(img)});
  return out;
}

PVal eps_U(const UVal& u) { return u.f(u.node); }

UVal delta_U(const UVal& u) {
  auto f = u.f;
  const std::int64_t block = u.block;
  return {block, u.node,
          [f, block](const Mono& x) { return PVal::make_boxed(UVal{block, x, f}); }};
}

PVal map_U(const UVal& u, const std::function<PVal(const PVal&)>& psi) {
  auto composed = [f = u.f, psi](const Mono& x) {
    PVal v = f(x);
    return v.is_zero() ? PVal::make_zero() : psi(v);
  };
  bool all_zero = true;
  for (std::int64_t p = 0; p <= u.block && all_zero; ++p)
    all_zero = composed(Mono{p, u.block - p}).is_zero();
  if (all_zero) return PVal::make_zero();
  return PVal::make_boxed(UVal{u.block, u.node, composed});
}

std::vector<std::string> comonad_laws(std::size_t asize, std::int64_t cutoff, std::size_t guard) {
  std::vector<std::string> issues;
  auto describe = [](const UVal& u) {
    return "block " + std::to_string(u.block) + " node " + u.node.label();
  };
  for (const UVal& u : u_elements(asize, cutoff, guard)) {
    const UVal du = delta_U(u);
    // eps_{U(A)} o Delta = id
    PVal e1 = eps_U(du);
    if (!e1.boxed || !uval_eq(*e1.boxed, u))
      issues.push_back("counit law eps_U(A) fails at " + describe(u));
    // U(eps_A) o Delta = id
    PVal e2 = map_U(du, [](const PVal& v) { return eps_U(*v.boxed); });
    if (!e2.boxed || !uval_eq(*e2.boxed, u))
      issues.push_back("counit law U(eps_A) fails at " + describe(u));
    // Delta_{U(A)} o Delta_A = U(Delta_A) o Delta_A
    const UVal lhs = delta_U(du);
    PVal rhs = map_U(du, [](const PVal& v) { return PVal::make_boxed(delta_U(*v.boxed)); });
    if (!rhs.boxed || !uval_eq(lhs, *rhs.boxed))
      issues.push_back("coassociativity fails at " + describe(u));
  }
  return issues;
}

int GCrystal::find(std::int64_t alpha, const std::vector<int>& f, std::int64_t pos) const {
  for (std::size_t k = 0; k < block_of.size(); ++k)
    if (block_of[k] == alpha && map_of[k] == f && pos_of[k] == pos) return static_cast<int>(k);
  return -1;
}

static std::string map_code(const std::vector<int>& img) {
  std::string s;
  for (std::size_t k = 0; k < img.size(); ++k) {
    if (k) s += ",";
    s += img[k] < 0 ? std::string("-") : std::to_string(img[k]);
  }
  return s;
}

GCrystal functor_G(std::size_t xsize, std::int64_t cutoff, std::size_t guard) {
  if (u_size_bound(xsize, cutoff) > guard)
    throw GuardExceeded("functor_G: enumeration bound exceeds guard");
  GCrystal g;
  g.crystal.cartan = CartanDatum::sl2();
  g.crystal.fedge.resize(1);
  g.crystal.eedge.resize(1);
  for (std::int64_t n = 0; n <= cutoff; ++n)
    for (const auto& img : nonzero_maps(xsize, n)) {
      int first = -1;
      for (std::int64_t p = 0; p <= n; ++p) {
        const Mono m{p, n - p};
        const std::string id = "B" + std::to_string(n) + "[" + map_code(img) + "]:" + m.label();
        int node = g.crystal.add_node(id, Weight::sl2(m.wt()), {ExtInt(m.eps())},
                                      {ExtInt(m.phi())});
        g.block_of.push_back(n);
        g.map_of.push_back(img);
        g.pos_of.push_back(p);
        if (p > 0) g.crystal.add_edge(0, node - 1, node);
        if (p == 0) first = node;
      }
      (void)first;
    }
  return g;
}

StrictMorphism functor_G_on_map(const GCrystal& gx, const GCrystal& gy,
                                const std::vector<int>& psi) {
  std::vector<int> img(gx.crystal.size(), -1);
  for (std::size_t k = 0; k < gx.crystal.size(); ++k) {
    std::vector<int> composed = gx.map_of[k];
    bool nonzero = false;
    for (int& v : composed) {
      v = v < 0 ? -1 : psi.at(v);
      nonzero = nonzero || v >= 0;
    }
    if (!nonzero) continue;
    img[k] = gy.find(gx.block_of[k], composed, gx.pos_of[k]);
  }
  return {std::make_shared<const Crystal>(gx.crystal), std::make_shared<const Crystal>(gy.crystal),
          std::move(img)};
}

// rho(phi) = eps'_Y o F(phi): read off the copy index map at the image node.
static std::vector<int> rho(const GCrystal& gy, const StrictMorphism& phi) {
  std::vector<int> out(phi.map.size(), -1);
  for (std::size_t v = 0; v < phi.map.size(); ++v)
    if (phi.map[v] >= 0) out[v] = gy.map_of[phi.map[v]][gy.pos_of[phi.map[v]]];
  return out;
}

bool adjunction_check(const Crystal& x, std::size_t ysize, std::int64_t cutoff,
                      std::size_t guard) {
  const GCrystal gy = functor_G(ysize, cutoff, guard);
  const auto hom_crys = enumerate_strict_morphisms(x, gy.crystal, guard);
  // all pointed maps F(x) -> y
  std::vector<std::vector<int>> hom_set;
  std::vector<int> img(x.size(), -1);
  while (true) {
    hom_set.push_back(img);
    std::size_t k = 0;
    for (; k < img.size(); ++k) {
      if (++img[k] < static_cast<int>(ysize)) break;
      img[k] = -1;
    }
    if (k == img.size()) break;
  }
  if (hom_crys.size() != hom_set.size()) return false;
  std::set<std::vector<int>> image;
  for (const auto& phi : hom_crys) image.insert(rho(gy, phi));
  std::set<std::vector<int>> expected(hom_set.begin(), hom_set.end());
  if (image != expected) return false;  // rho must be a bijection

  // naturality in y against every pointed map y -> y' = y + {*'}
  const GCrystal gyp = functor_G(ysize + 1, cutoff, guard);
  std::vector<int> psi(ysize, -1);
  while (true) {
    for (const auto& phi : hom_crys) {
      const StrictMorphism gpsi = functor_G_on_map(gy, gyp, psi);
      StrictMorphism composed{phi.source, gpsi.target, std::vector<int>(x.size(), -1)};
      for (std::size_t v = 0; v < x.size(); ++v) composed.map[v] = gpsi.apply(phi.map[v]);
      std::vector<int> lhs = rho(gyp, composed);
      std::vector<int> rhs = rho(gy, phi);
      for (int& v : rhs) v = v < 0 ? -1 : psi[v];
      if (lhs != rhs) return false;
    }
    std::size_t k = 0;
    for (; k < psi.size(); ++k) {
      if (++psi[k] < static_cast<int>(ysize) + 1) break;
      psi[k] = -1;
    }
    if (k == psi.size()) break;
  }
  return true;
}

std::vector<UVal> zeta_coalgebra(const Crystal& x, std::int64_t cutoff) {
  std::vector<UVal> out(x.size());
  for (const auto& part : decompose(x).parts) {
    if (!part.cls || part.cls->lambda != part.cls->n)
      throw std::invalid_argument("zeta_coalgebra: not a union of B(alpha) components");
    const Sl2Class& cls = *part.cls;
    if (cls.n > cutoff) throw GuardExceeded("zeta_coalgebra: component outside the cutoff");
    std::vector<int> inclusion(cls.n + 1);
    for (std::int64_t p = 0; p <= cls.n; ++p) inclusion[p] = cls.chain[p];
    for (std::int64_t p = 0; p <= cls.n; ++p)
      out[cls.chain[p]] = UVal{cls.n, Mono{p, cls.n - p}, base_map(inclusion)};
  }
  return out;
}

Crystal recover_structure(const std::vector<std::string>& labels, const std::vector<UVal>& zeta,
                          std::int64_t cutoff) {
  if (labels.size() != zeta.size())
    throw std::invalid_argument("recover_structure: label/coaction length mismatch");
  for (std::size_t v = 0; v < zeta.size(); ++v) {
    if (zeta[v].block > cutoff) throw GuardExceeded("recover_structure: block outside cutoff");
    // counit law eps o zeta = id
    PVal e = eps_U(zeta[v]);
    if (e.base != static_cast<int>(v))
      throw std::invalid_argument("recover_structure: eps o zeta != id at " + labels[v]);
    // coassociativity U(zeta) o zeta = Delta o zeta
    PVal lhs = map_U(zeta[v], [&](const PVal& w) { return PVal::make_boxed(zeta.at(w.base)); });
    const UVal rhs = delta_U(zeta[v]);
    if (!lhs.boxed || !uval_eq(*lhs.boxed, rhs))
      throw std::invalid_argument("recover_structure: coalgebra square fails at " + labels[v]);
  }
  Crystal c;
  c.cartan = CartanDatum::sl2();
  c.fedge.resize(1);
  c.eedge.resize(1);
  for (std::size_t v = 0; v < zeta.size(); ++v) {
    const Mono node = zeta[v].node;
    c.add_node(labels[v], Weight::sl2(node.wt()), {ExtInt(node.eps())}, {ExtInt(node.phi())});
  }
  for (std::size_t v = 0; v < zeta.size(); ++v) {
    // f~ = eps_A o (f~ on U(A)) o zeta
    const Mono fnode = zeta[v].node.f();
    if (fnode.is_zero()) continue;
    PVal target = zeta[v].f(fnode);
    if (target.is_zero()) continue;
    c.add_edge(0, static_cast<int>(v), target.base);
  }
  auto issues = validate(c);
  if (!issues.empty())
    throw std::invalid_argument("recover_structure: recovered structure fails validation: " +
                                issues.front().axiom);
  return c;
}

ThetaImage theta(const UVal& u) {
  ThetaImage img;
  PVal tail = u.f(Mono::hw(u.block));
  if (tail.is_zero()) return img;
  img.zero = false;
  img.elem = BElem{u.block, u.node, Mono::hw(u.block)};
  img.tail = std::move(tail);
  return img;
}

PVal chi_val(const UVal& u, const UVal& v) {
  const auto& table = sl2_tensor_table(u.block, v.block);
  auto [comp, pos] = table.locate(u.node, v.node);
  const std::int64_t gamma = table.gamma[comp];
  const auto chain = table.node_at[comp];
  const std::int64_t bu = u.block, bv = v.block;
  auto h = [fu = u.f, fv = v.f, chain, bu, bv](const Mono& m) {
    auto [i, r] = chain.at(m.i);
    return PVal::make_pair(fu(Mono{i, bu - i}), fv(Mono{r, bv - r}));
  };
  bool all_zero = true;
  for (std::int64_t p = 0; p <= gamma && all_zero; ++p)
    all_zero = h(Mono{p, gamma - p}).is_zero();
  if (all_zero) return PVal::make_zero();
  return PVal::make_boxed(UVal{gamma, Mono{pos, gamma - pos}, h});
}

UVal chi_unit() {
  return {0, Mono{0, 0}, [](const Mono&) { return PVal::make_base(0); }};
}

std::vector<std::string> chi_diagrams(std::size_t asize, std::size_t bsize, std::int64_t cutoff,
                                      std::size_t guard) {
  std::vector<std::string> issues;
  const auto ua = u_elements(asize, cutoff, guard);
  const auto ub = u_elements(bsize, cutoff, guard);
  auto apply_chi = [](const PVal& p) { return chi_val(*p.pair->first.boxed, *p.pair->second.boxed); };
  for (const UVal& u : ua)
    for (const UVal& v : ub) {
      // compatibility square with the comultiplications
      PVal w = chi_val(u, v);
      PVal lhs = w.is_zero() ? PVal::make_zero() : PVal::make_boxed(delta_U(*w.boxed));
      PVal mid = chi_val(delta_U(u), delta_U(v));
      PVal rhs = mid.is_zero() ? PVal::make_zero() : map_U(*mid.boxed, apply_chi);
      if (!pval_eq(lhs, rhs)) {
        issues.push_back("chi square fails at blocks " + std::to_string(u.block) + "," +
                         std::to_string(v.block));
        return issues;
      }
    }
  // unit triangles: chi against the unit coalgebra element collapses to the
  // identity under the projection A x I = A
  auto proj_first = [](const PVal& p) { return p.pair->first; };
  auto proj_second = [](const PVal& p) { return p.pair->second; };
  for (const UVal& u : ua) {
    PVal right = chi_val(u, chi_unit());
    PVal collapsed = right.is_zero() ? PVal::make_zero() : map_U(*right.boxed, proj_first);
    if (!collapsed.boxed || !uval_eq(*collapsed.boxed, u)) {
      issues.push_back("right unit triangle fails");
      return issues;
    }
    PVal left = chi_val(chi_unit(), u);
    PVal collapsed2 = left.is_zero() ? PVal::make_zero() : map_U(*left.boxed, proj_second);
    if (!collapsed2.boxed || !uval_eq(*collapsed2.boxed, u)) {
      issues.push_back("left unit triangle fails");
      return issues;
    }
  }
  return issues;
}

Crystal equaliser(const StrictMorphism& f, const StrictMorphism& g) {
  if (!(*f.source == *g.source) || !(*f.target == *g.target))
    throw std::invalid_argument("equaliser: maps are not parallel");
  const Crystal& x = *f.source;
  std::vector<int> keep;
  for (const auto& view : component_views(x)) {
    bool agree = true;
    for (int v : view.nodes) agree = agree && f.map[v] == g.map[v];
    if (agree)
      for (int v : view.nodes) keep.push_back(v);
  }
  std::sort(keep.begin(), keep.end());
  Crystal e = subcrystal(x, keep);
  // F preserves the equaliser: the kept nodes are exactly where f and g agree
  std::set<int> kept(keep.begin(), keep.end());
  for (std::size_t v = 0; v < x.size(); ++v) {
    const bool agree = f.map[v] == g.map[v];
    if (agree != kept.contains(static_cast<int>(v)))
      throw std::logic_error("equaliser: forgetful image is not the pointwise equaliser");
  }
  return e;
}

}  // namespace crysalg
