#include "crysalg/crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace crysalg {

int Crystal::index_of(const std::string& id) const {
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (ids[k] == id) return static_cast<int>(k);
  return -1;
}

bool Crystal::is_highest_weight(int node) const {
  for (std::size_t i = 0; i < ncolors(); ++i)
    if (e(i, node) >= 0) return false;
  return true;
}

int Crystal::add_node(std::string id, Weight w, std::vector<ExtInt> eps_row,
                      std::vector<ExtInt> phi_row) {
  ids.push_back(std::move(id));
  wt.push_back(std::move(w));
  eps.push_back(std::move(eps_row));
  phi.push_back(std::move(phi_row));
  for (auto& col : fedge) col.push_back(-1);
  for (auto& col : eedge) col.push_back(-1);
  return static_cast<int>(ids.size()) - 1;
}

void Crystal::add_edge(std::size_t color, int from, int to) {
  fedge[color][from] = to;
  eedge[color][to] = from;
}

void Crystal::make_seminormal() {
  for (std::size_t b = 0; b < size(); ++b)
    for (std::size_t i = 0; i < ncolors(); ++i) {
      std::int64_t ne = 0;
      for (int u = e(i, static_cast<int>(b)); u >= 0; u = e(i, u)) ++ne;
      std::int64_t nf = 0;
      for (int u = f(i, static_cast<int>(b)); u >= 0; u = f(i, u)) ++nf;
      eps[b][i] = ne;
      phi[b][i] = nf;
    }
  seminormal = true;
}

static Crystal empty_sl2_crystal() {
  Crystal c;
  c.cartan = CartanDatum::sl2();
  c.fedge.resize(1);
  c.eedge.resize(1);
  return c;
}

Crystal build_Bn(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("build_Bn: n must be nonnegative");
  Crystal c = empty_sl2_crystal();
  for (std::int64_t i = 0; i <= n; ++i) {
    Mono m{i, n - i};
    c.add_node(m.label(), Weight::sl2(m.wt()), {ExtInt(m.eps())}, {ExtInt(m.phi())});
  }
  for (std::int64_t i = 0; i < n; ++i) c.add_edge(0, static_cast<int>(i), static_cast<int>(i + 1));
  return c;
}

Crystal build_T(const Weight& lambda) {
  Crystal c;
  c.cartan = CartanDatum::sl2();
  if (lambda.rank() != 1) {
    c.cartan.index_set.clear();
    c.cartan.pairing.clear();
    for (std::size_t i = 0; i < lambda.rank(); ++i) {
      c.cartan.index_set.push_back(std::to_string(i + 1));
      std::vector<std::int64_t> row(lambda.rank(), 0);
      row[i] = 2;
      c.cartan.pairing.push_back(std::move(row));
    }
  }
  c.fedge.resize(c.cartan.rank());
  c.eedge.resize(c.cartan.rank());
  std::vector<ExtInt> inf_row(c.cartan.rank(), ExtInt::minus_inf());
  c.add_node("t[" + lambda.str() + "]", lambda, inf_row, inf_row);
  c.seminormal = false;  // eps = -inf never matches step counts
  return c;
}

Crystal build_T_sl2(std::int64_t lambda) { return build_T(Weight::sl2(lambda)); }

std::vector<ValidationIssue> validate(const Crystal& c) {
  std::vector<ValidationIssue> issues;
  for (const auto& s : c.cartan.validate()) issues.push_back({"", "", "cartan", s});
  const std::size_t r = c.cartan.rank();
  for (std::size_t b = 0; b < c.size(); ++b) {
    if (c.wt[b].rank() != r)
      issues.push_back({c.ids[b], "", "weight-rank", "weight vector has wrong length"});
    if (c.eps[b].size() != r || c.phi[b].size() != r) {
      issues.push_back({c.ids[b], "", "stat-rank", "eps/phi rows have wrong length"});
      continue;
    }
  }
  if (!issues.empty()) return issues;

  for (std::size_t i = 0; i < r; ++i) {
    const auto& color = c.cartan.index_set[i];
    for (std::size_t b = 0; b < c.size(); ++b) {
      const int bi = static_cast<int>(b);
      const ExtInt epsb = c.eps[b][i], phib = c.phi[b][i];
      // phi_i(b) = lambda_i(wt(b)) + eps_i(b)
      if (!(phib == epsb + c.cartan.apply(i, c.wt[b])))
        issues.push_back({c.ids[b], color, "phi=wt+eps",
                          "phi = " + phib.str() + ", lambda(wt)+eps = " +
                              (epsb + c.cartan.apply(i, c.wt[b])).str()});
      // stored e must be inverse to stored f
      const int fb = c.f(i, bi);
      if (fb >= 0 && c.e(i, fb) != bi)
        issues.push_back({c.ids[b], color, "e-f-bijectivity", "e(f(b)) != b"});
      const int eb = c.e(i, bi);
      if (eb >= 0 && c.f(i, eb) != bi)
        issues.push_back({c.ids[b], color, "e-f-bijectivity", "f(e(b)) != b"});
      if (fb >= 0) {
        if (!(c.wt[fb] == c.wt[b] - c.cartan.simple_root(i)))
          issues.push_back({c.ids[b], color, "wt-step", "wt(f b) != wt(b) - alpha_i"});
        if (!(c.eps[fb][i] == epsb + 1))
          issues.push_back({c.ids[b], color, "eps-step", "eps(f b) != eps(b) + 1"});
        if (!(c.phi[fb][i] == phib - 1))
          issues.push_back({c.ids[b], color, "phi-step", "phi(f b) != phi(b) - 1"});
      }
      if (!phib.finite() && (fb >= 0 || eb >= 0))
        issues.push_back({c.ids[b], color, "minus-inf", "phi = -inf but e or f is defined"});
      if (c.seminormal) {
        std::int64_t ne = 0;
        for (int u = c.e(i, bi); u >= 0; u = c.e(i, u)) ++ne;
        std::int64_t nf = 0;
        for (int u = c.f(i, bi); u >= 0; u = c.f(i, u)) ++nf;
        if (!(epsb == ExtInt(ne)))
          issues.push_back({c.ids[b], color, "seminormal-eps",
                            "eps = " + epsb.str() + ", e-steps = " + std::to_string(ne)});
        if (!(phib == ExtInt(nf)))
          issues.push_back({c.ids[b], color, "seminormal-phi",
                            "phi = " + phib.str() + ", f-steps = " + std::to_string(nf)});
      }
    }
  }
  return issues;
}

Crystal dual(const Crystal& c) {
  Crystal d;
  d.cartan = c.cartan;
  d.seminormal = c.seminormal;
  d.fedge = c.eedge;
  d.eedge = c.fedge;
  for (std::size_t b = 0; b < c.size(); ++b) {
    d.ids.push_back(c.ids[b] + "∨");
    d.wt.push_back(-c.wt[b]);
    d.eps.push_back(c.phi[b]);
    d.phi.push_back(c.eps[b]);
  }
  return d;
}

Crystal disjoint_union(const Crystal& a, const Crystal& b) {
  if (!(a.cartan == b.cartan)) throw std::invalid_argument("disjoint_union: Cartan mismatch");
  Crystal u;
  u.cartan = a.cartan;
  u.seminormal = a.seminormal && b.seminormal;
  u.fedge.resize(u.cartan.rank());
  u.eedge.resize(u.cartan.rank());
  const int na = static_cast<int>(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    u.add_node(a.ids[k] + "@0", a.wt[k], a.eps[k], a.phi[k]);
  for (std::size_t k = 0; k < b.size(); ++k)
    u.add_node(b.ids[k] + "@1", b.wt[k], b.eps[k], b.phi[k]);
  for (std::size_t i = 0; i < u.cartan.rank(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a.fedge[i][k] >= 0) u.add_edge(i, static_cast<int>(k), a.fedge[i][k]);
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b.fedge[i][k] >= 0) u.add_edge(i, static_cast<int>(k) + na, b.fedge[i][k] + na);
  }
  return u;
}

std::vector<ComponentView> component_views(const Crystal& c) {
  std::vector<ComponentView> out;
  std::vector<int> comp_of(c.size(), -1);
  for (std::size_t start = 0; start < c.size(); ++start) {
    if (comp_of[start] >= 0) continue;
    // collect the undirected component
    std::vector<int> members;
    std::deque<int> queue{static_cast<int>(start)};
    comp_of[start] = static_cast<int>(out.size());
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (std::size_t i = 0; i < c.ncolors(); ++i)
        for (int v : {c.f(i, u), c.e(i, u)})
          if (v >= 0 && comp_of[v] < 0) {
            comp_of[v] = comp_of[start];
            queue.push_back(v);
          }
    }
    // anchor: highest-weight node with least label, else least label
    int hw = -1;
    for (int v : members)
      if (c.is_highest_weight(v) && (hw < 0 || c.ids[v] < c.ids[hw])) hw = v;
    if (hw < 0)
      for (int v : members)
        if (hw < 0 || c.ids[v] < c.ids[hw]) hw = v;
    // deterministic BFS order from the anchor, f-edges before e-edges
    ComponentView view;
    view.hw_node = hw;
    std::set<int> seen{hw};
    std::deque<int> order{hw};
    while (!order.empty()) {
      int u = order.front();
      order.pop_front();
      view.nodes.push_back(u);
      for (std::size_t i = 0; i < c.ncolors(); ++i)
        if (int v = c.f(i, u); v >= 0 && seen.insert(v).second) order.push_back(v);
      for (std::size_t i = 0; i < c.ncolors(); ++i)
        if (int v = c.e(i, u); v >= 0 && seen.insert(v).second) order.push_back(v);
    }
    out.push_back(std::move(view));
  }
  std::sort(out.begin(), out.end(), [&](const ComponentView& x, const ComponentView& y) {
    if (!(c.wt[x.hw_node] == c.wt[y.hw_node])) return c.wt[y.hw_node] < c.wt[x.hw_node];
    return c.ids[x.hw_node] < c.ids[y.hw_node];
  });
  return out;
}

Crystal subcrystal(const Crystal& c, const std::vector<int>& nodes) {
  Crystal part;
  part.cartan = c.cartan;
  part.seminormal = c.seminormal;
  part.fedge.resize(c.cartan.rank());
  part.eedge.resize(c.cartan.rank());
  std::vector<int> local(c.size(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    local[nodes[k]] = static_cast<int>(k);
    part.add_node(c.ids[nodes[k]], c.wt[nodes[k]], c.eps[nodes[k]], c.phi[nodes[k]]);
  }
  for (std::size_t i = 0; i < c.ncolors(); ++i)
    for (int u : nodes)
      if (int v = c.f(i, u); v >= 0 && local[v] >= 0) part.add_edge(i, local[u], local[v]);
  return part;
}

std::vector<Crystal> components(const Crystal& c) {
  std::vector<Crystal> out;
  for (const auto& view : component_views(c)) out.push_back(subcrystal(c, view.nodes));
  return out;
}

bool StrictMorphism::is_zero() const {
  for (int v : map)
    if (v >= 0) return false;
  return true;
}

bool is_strict(const StrictMorphism& m, std::string* why) {
  const Crystal& a = *m.source;
  const Crystal& b = *m.target;
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (m.map.size() != a.size()) return fail("assignment has wrong length");
  for (std::size_t u = 0; u < a.size(); ++u) {
    int v = m.map[u];
    if (v < 0) continue;
    if (v >= static_cast<int>(b.size())) return fail("assignment out of range");
    if (!(a.wt[u] == b.wt[v])) return fail("wt not preserved at " + a.ids[u]);
    for (std::size_t i = 0; i < a.ncolors(); ++i) {
      if (!(a.eps[u][i] == b.eps[v][i])) return fail("eps not preserved at " + a.ids[u]);
      if (!(a.phi[u][i] == b.phi[v][i])) return fail("phi not preserved at " + a.ids[u]);
    }
  }
  for (std::size_t i = 0; i < a.ncolors(); ++i)
    for (std::size_t u = 0; u < a.size(); ++u) {
      const int ui = static_cast<int>(u);
      if (m.apply(a.f(i, ui)) != b.f(i, m.apply(ui)))
        return fail("f_" + a.cartan.index_set[i] + " does not commute at " + a.ids[u]);
      if (m.apply(a.e(i, ui)) != b.e(i, m.apply(ui)))
        return fail("e_" + a.cartan.index_set[i] + " does not commute at " + a.ids[u]);
    }
  return true;
}

// Candidate component maps: the zero map plus every propagation of an anchor
// image through the component's edges that survives the strictness check.
static std::vector<std::vector<std::pair<int, int>>> component_candidates(
    const std::shared_ptr<const Crystal>& a, const std::shared_ptr<const Crystal>& b,
    const ComponentView& comp) {
  std::vector<std::vector<std::pair<int, int>>> result;
  result.push_back({});  // zero on this component
  for (std::size_t t = 0; t < b->size(); ++t) {
    std::vector<int> img(a->size(), -1);
    img[comp.hw_node] = static_cast<int>(t);
    bool ok = true;
    for (int u : comp.nodes) {  // BFS order: u is assigned before its neighbors
      for (std::size_t i = 0; i < a->ncolors() && ok; ++i) {
        if (int v = a->f(i, u); v >= 0) {
          int w = b->f(i, img[u] < 0 ? -1 : img[u]);
          if (img[v] == -1 || img[v] == w)
            img[v] = w;
          else
            ok = false;
        }
        if (int v = a->e(i, u); v >= 0) {
          int w = b->e(i, img[u] < 0 ? -1 : img[u]);
          if (img[v] == -1 || img[v] == w)
            img[v] = w;
          else
            ok = false;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    StrictMorphism frag{a, b, img};
    if (!is_strict(frag)) continue;
    if (frag.is_zero()) continue;  // zero already included once
    std::vector<std::pair<int, int>> assignment;
    for (int u : comp.nodes)
      if (img[u] >= 0) assignment.emplace_back(u, img[u]);
    result.push_back(std::move(assignment));
  }
  return result;
}

std::vector<StrictMorphism> enumerate_strict_morphisms(const Crystal& a, const Crystal& b,
                                                       std::size_t guard) {
  if (a.size() * b.size() > guard)
    throw GuardExceeded("enumerate_strict_morphisms: |a|*|b| = " +
                        std::to_string(a.size() * b.size()) + " exceeds guard " +
                        std::to_string(guard));
  if (!(a.cartan == b.cartan))
    throw std::invalid_argument("enumerate_strict_morphisms: Cartan mismatch");
  auto pa = std::make_shared<const Crystal>(a);
  auto pb = std::make_shared<const Crystal>(b);
  auto comps = component_views(a);
  std::vector<std::vector<std::vector<std::pair<int, int>>>> choices;
  for (const auto& comp : comps) choices.push_back(component_candidates(pa, pb, comp));

  std::vector<StrictMorphism> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<int> img(a.size(), -1);
    for (std::size_t k = 0; k < choices.size(); ++k)
      for (auto [u, v] : choices[k][pick[k]]) img[u] = v;
    out.push_back({pa, pb, std::move(img)});
    std::size_t k = 0;
    for (; k < pick.size(); ++k) {
      if (++pick[k] < choices[k].size()) break;
      pick[k] = 0;
    }
    if (k == pick.size()) break;
  }
  return out;
}

// Propagate a node pairing across a component; false if inconsistent.
static bool try_component_match(const Crystal& a, const Crystal& b, const ComponentView& ca,
                                int anchor_b, std::vector<int>& img) {
  img[ca.hw_node] = anchor_b;
  for (int u : ca.nodes) {
    if (img[u] < 0) return false;  // unreachable under forced propagation
    for (std::size_t i = 0; i < a.ncolors(); ++i) {
      if (int v = a.f(i, u); v >= 0) {
        int w = b.f(i, img[u]);
        if (w < 0 || (img[v] >= 0 && img[v] != w)) return false;
        img[v] = w;
      } else if (b.f(i, img[u]) >= 0) {
        return false;
      }
      if (int v = a.e(i, u); v >= 0) {
        int w = b.e(i, img[u]);
        if (w < 0 || (img[v] >= 0 && img[v] != w)) return false;
        img[v] = w;
      } else if (b.e(i, img[u]) >= 0) {
        return false;
      }
    }
  }
  std::set<int> hit;
  for (int u : ca.nodes) {
    if (!hit.insert(img[u]).second) return false;  // not injective
    if (!(a.wt[u] == b.wt[img[u]])) return false;
    for (std::size_t k = 0; k < a.ncolors(); ++k)
      if (!(a.eps[u][k] == b.eps[img[u]][k] && a.phi[u][k] == b.phi[img[u]][k])) return false;
  }
  return true;
}

static bool match_components(const Crystal& a, const Crystal& b,
                             const std::vector<ComponentView>& ca,
                             const std::vector<ComponentView>& cb, std::size_t k,
                             std::vector<bool>& used, std::vector<int>& img) {
  if (k == ca.size()) return true;
  for (std::size_t j = 0; j < cb.size(); ++j) {
    if (used[j] || cb[j].nodes.size() != ca[k].nodes.size()) continue;
    std::vector<int> saved = img;
    if (try_component_match(a, b, ca[k], cb[j].hw_node, img)) {
      used[j] = true;
      if (match_components(a, b, ca, cb, k + 1, used, img)) return true;
      used[j] = false;
    }
    img = std::move(saved);
  }
  return false;
}

std::optional<std::vector<int>> find_isomorphism(const Crystal& a, const Crystal& b) {
  if (!(a.cartan == b.cartan) || a.size() != b.size()) return std::nullopt;
  auto ca = component_views(a);
  auto cb = component_views(b);
  if (ca.size() != cb.size()) return std::nullopt;
  std::vector<bool> used(cb.size(), false);
  std::vector<int> img(a.size(), -1);
  if (!match_components(a, b, ca, cb, 0, used, img)) return std::nullopt;
  return img;
}

bool isomorphic(const Crystal& a, const Crystal& b) { return find_isomorphism(a, b).has_value(); }

// The standard form B(n) x T_mu built directly: eps = i, phi = n - i + mu,
// wt = n - 2i + mu.
static Crystal build_Bn_T(std::int64_t n, std::int64_t mu) {
  Crystal c = empty_sl2_crystal();
  for (std::int64_t i = 0; i <= n; ++i) {
    Mono m{i, n - i};
    std::string id = m.label() + "⊗t[" + std::to_string(mu) + "]";
    c.add_node(id, Weight::sl2(m.wt() + mu), {ExtInt(m.eps())}, {ExtInt(m.phi() + mu)});
  }
  for (std::int64_t i = 0; i < n; ++i) c.add_edge(0, static_cast<int>(i), static_cast<int>(i + 1));
  c.seminormal = (mu == 0);
  return c;
}

Sl2Class classify_irreducible_sl2(const Crystal& c) {
  if (c.cartan.rank() != 1) throw std::invalid_argument("classify_irreducible_sl2: not sl2");
  if (c.size() == 0) throw std::invalid_argument("classify_irreducible_sl2: empty crystal");
  auto views = component_views(c);
  if (views.size() != 1) throw std::invalid_argument("classify_irreducible_sl2: not irreducible");
  int hw = -1;
  for (std::size_t u = 0; u < c.size(); ++u)
    if (c.e(0, static_cast<int>(u)) < 0) {
      if (hw >= 0) throw std::invalid_argument("classify_irreducible_sl2: not a chain");
      hw = static_cast<int>(u);
    }
  if (hw < 0) throw std::invalid_argument("classify_irreducible_sl2: no highest-weight node");
  Sl2Class result;
  result.n = static_cast<std::int64_t>(c.size()) - 1;
  result.lambda = c.wt[hw].coords[0];
  for (int u = hw; u >= 0; u = c.f(0, u)) result.chain.push_back(u);
  if (result.chain.size() != c.size())
    throw std::invalid_argument("classify_irreducible_sl2: not a chain");
  Crystal standard = build_Bn_T(result.n, result.lambda - result.n);
  std::vector<int> img(standard.size());
  for (std::size_t k = 0; k < result.chain.size(); ++k) img[k] = result.chain[k];
  result.witness = {std::make_shared<const Crystal>(std::move(standard)),
                    std::make_shared<const Crystal>(c), std::move(img)};
  std::string why;
  if (!is_strict(result.witness, &why))
    throw std::invalid_argument("classify_irreducible_sl2: not of the form B(n) x T: " + why);
  return result;
}

int chain_position(const ComponentView& comp, int node) {
  for (std::size_t k = 0; k < comp.nodes.size(); ++k)
    if (comp.nodes[k] == node) return static_cast<int>(k);
  return -1;
}

}  // namespace crysalg
