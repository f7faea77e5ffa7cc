#include "crysalg/tensor.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace crysalg {

TensorCrystal tensor(const Crystal& a, const Crystal& b) {
  if (!(a.cartan == b.cartan)) throw std::invalid_argument("tensor: Cartan mismatch");
  TensorCrystal t;
  t.left = std::make_shared<const Crystal>(a);
  t.right = std::make_shared<const Crystal>(b);
  Crystal& c = t.crystal;
  c.cartan = a.cartan;
  c.seminormal = a.seminormal && b.seminormal;
  const std::size_t r = c.cartan.rank();
  c.fedge.resize(r);
  c.eedge.resize(r);
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < b.size(); ++v) {
      std::vector<ExtInt> eps_row(r), phi_row(r);
      for (std::size_t i = 0; i < r; ++i) {
        eps_row[i] = max(a.eps[u][i], b.eps[v][i] - c.cartan.apply(i, a.wt[u]));
        phi_row[i] = max(a.phi[u][i] + c.cartan.apply(i, b.wt[v]), b.phi[v][i]);
      }
      c.add_node(a.ids[u] + "⊗" + b.ids[v], a.wt[u] + b.wt[v], std::move(eps_row),
                 std::move(phi_row));
      t.factor.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t u = 0; u < a.size(); ++u)
      for (std::size_t v = 0; v < b.size(); ++v) {
        const int ui = static_cast<int>(u), vi = static_cast<int>(v);
        int img;
        if (a.phi[u][i] > b.eps[v][i])
          img = t.pair_index(a.f(i, ui), vi);
        else
          img = t.pair_index(ui, b.f(i, vi));
        if (img >= 0) c.add_edge(i, t.pair_index(ui, vi), img);
      }
  // cross-checks: the e-routing rule must invert the stored f-edges, and for
  // seminormal factors the max-formulas must equal the step counts
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t u = 0; u < a.size(); ++u)
      for (std::size_t v = 0; v < b.size(); ++v) {
        const int ui = static_cast<int>(u), vi = static_cast<int>(v);
        int img;
        if (a.phi[u][i] >= b.eps[v][i])
          img = t.pair_index(a.e(i, ui), vi);
        else
          img = t.pair_index(ui, b.e(i, vi));
        if (img != c.e(i, t.pair_index(ui, vi)))
          throw std::logic_error("tensor: e-rule does not invert f-rule at " +
                                 c.ids[t.pair_index(ui, vi)]);
      }
  if (c.seminormal) {
    Crystal copy = c;
    copy.make_seminormal();
    for (std::size_t u = 0; u < c.size(); ++u)
      for (std::size_t i = 0; i < r; ++i)
        if (!(copy.eps[u][i] == c.eps[u][i] && copy.phi[u][i] == c.phi[u][i]))
          throw std::logic_error("tensor: max-formula disagrees with step counts at " + c.ids[u]);
  }
  return t;
}

std::vector<std::size_t> Decomposition::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& p : parts) s.push_back(p.view.nodes.size());
  return s;
}

Decomposition decompose(const Crystal& c) {
  Decomposition d;
  auto ambient = std::make_shared<const Crystal>(c);
  for (auto& view : component_views(c)) {
    DecompositionPart part;
    part.view = view;
    if (c.cartan.rank() == 1) {
      Crystal piece = subcrystal(c, view.nodes);
      Sl2Class cls = classify_irreducible_sl2(piece);
      // re-target the witness at the ambient crystal
      std::vector<int> img(cls.witness.map.size());
      for (std::size_t k = 0; k < img.size(); ++k) img[k] = view.nodes[cls.witness.map[k]];
      cls.witness = {cls.witness.source, ambient, std::move(img)};
      for (auto& node : cls.chain) node = view.nodes[node];
      part.cls = std::move(cls);
    }
    d.parts.push_back(std::move(part));
  }
  return d;
}

std::vector<std::int64_t> cg_multiset(std::int64_t m, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k <= std::min(m, n); ++k) out.push_back(m + n - 2 * k);
  return out;
}

StrictMorphism embed_Bn(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("embed_Bn: n must be >= 1");
  Crystal b1 = build_Bn(1);
  Crystal target = b1;
  for (std::int64_t k = 1; k < n; ++k) target = tensor(target, b1).crystal;
  Crystal source = build_Bn(n);
  std::vector<int> img(source.size());
  for (std::int64_t i = 0; i <= n; ++i) {
    // x^i y^(n-i) -> x (x) ... (x) x (x) y (x) ... (x) y; in B(1), y is node 0
    std::int64_t index = 0;
    for (std::int64_t k = 0; k < n; ++k) index = 2 * index + (k < i ? 1 : 0);
    img[i] = static_cast<int>(index);
  }
  return {std::make_shared<const Crystal>(std::move(source)),
          std::make_shared<const Crystal>(std::move(target)), std::move(img)};
}

std::vector<int> zeta(const Crystal& c) {
  std::vector<int> perm(c.size(), -1);
  for (const auto& view : component_views(c)) {
    Sl2Class cls = classify_irreducible_sl2(subcrystal(c, view.nodes));
    const std::size_t l = cls.chain.size();
    for (std::size_t k = 0; k < l; ++k)
      perm[view.nodes[cls.chain[k]]] = view.nodes[cls.chain[l - 1 - k]];
  }
  return perm;
}

std::pair<std::int64_t, std::int64_t> Sl2TensorTable::locate(const Mono& a, const Mono& b) const {
  return {comp[a.i][b.i], pos[a.i][b.i]};
}

const Sl2TensorTable& sl2_tensor_table(std::int64_t m, std::int64_t n) {
  static std::map<std::pair<std::int64_t, std::int64_t>, Sl2TensorTable> cache;
  static std::mutex lock;
  std::scoped_lock g(lock);
  auto it = cache.find({m, n});
  if (it != cache.end()) return it->second;

  TensorCrystal t = tensor(build_Bn(m), build_Bn(n));
  Decomposition d = decompose(t.crystal);
  Sl2TensorTable table;
  table.m = m;
  table.n = n;
  table.comp.assign(m + 1, std::vector<int>(n + 1, -1));
  table.pos.assign(m + 1, std::vector<std::int64_t>(n + 1, -1));
  for (std::size_t k = 0; k < d.parts.size(); ++k) {
    const auto& cls = *d.parts[k].cls;
    table.gamma.push_back(cls.n);
    std::vector<std::pair<std::int64_t, std::int64_t>> chain_nodes;
    for (std::size_t p = 0; p < cls.chain.size(); ++p) {
      auto [i, r] = t.factor[cls.chain[p]];
      table.comp[i][r] = static_cast<int>(k);
      table.pos[i][r] = static_cast<std::int64_t>(p);
      chain_nodes.emplace_back(i, r);
    }
    table.node_at.push_back(std::move(chain_nodes));
  }
  return cache.emplace(std::make_pair(m, n), std::move(table)).first->second;
}

std::pair<std::int64_t, Mono> tensor_image(const Mono& a, const Mono& b) {
  const auto& table = sl2_tensor_table(a.deg(), b.deg());
  auto [comp, pos] = table.locate(a, b);
  const std::int64_t gamma = table.gamma[comp];
  return {gamma, Mono{pos, gamma - pos}};
}

std::pair<Mono, Mono> commutor_sl2(const Mono& a, const Mono& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("commutor_sl2: malformed element");
  const std::int64_t i = a.i, j = a.j, r = b.i, s = b.j;
  if (j <= r && i <= s) return {Mono{i + r - j, s + j - i}, Mono{j, i}};
  if (j <= r) return {Mono{s + r - j, j}, Mono{i + j - s, s}};
  if (i <= s) return {Mono{i, r + s - i}, Mono{r, i + j - r}};
  return {Mono{s, r}, Mono{i + r - s, j + s - r}};
}

std::pair<Mono, Mono> commutor_oracle(const Mono& a, const Mono& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("commutor_oracle: malformed element");
  const std::int64_t n = a.deg(), m = b.deg();
  const Mono zb = b.flip(), za = a.flip();  // zeta on the factors, then swap
  const auto& table = sl2_tensor_table(m, n);
  auto [comp, pos] = table.locate(zb, za);
  const std::int64_t gamma = table.gamma[comp];
  auto [i, r] = table.node_at[comp][gamma - pos];  // zeta inside the product: chain reversal
  return {Mono{i, m - i}, Mono{r, n - r}};
}

std::pair<int, int> commutor_nodes(const Crystal& a, const Crystal& b, int na, int nb) {
  const int za = zeta(a)[na];
  const int zb = zeta(b)[nb];
  TensorCrystal t = tensor(b, a);
  const int node = t.pair_index(zb, za);
  return t.factor[zeta(t.crystal)[node]];
}

}  // namespace crysalg
