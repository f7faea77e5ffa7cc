#ifndef CRYSALG_CRYSTAL_HPP
#define CRYSALG_CRYSTAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crysalg/cartan.hpp"
#include "crysalg/extint.hpp"
#include "crysalg/mono.hpp"

namespace crysalg {

/// Thrown when an enumeration would exceed its configured size guard.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite crystal: nodes with weights and string statistics and, per color,
/// the partial map f_i together with its inverse e_i.  Node index -1 plays
/// the role of the pointed-set zero throughout.
struct Crystal {
  CartanDatum cartan;
  std::vector<std::string> ids;
  std::vector<Weight> wt;
  std::vector<std::vector<ExtInt>> eps;  // [node][color]
  std::vector<std::vector<ExtInt>> phi;  // [node][color]
  std::vector<std::vector<int>> fedge;   // [color][node] -> node or -1
  std::vector<std::vector<int>> eedge;   // [color][node] -> node or -1
  bool seminormal = true;

  std::size_t size() const { return ids.size(); }
  std::size_t ncolors() const { return cartan.rank(); }

  int index_of(const std::string& id) const;
  int f(std::size_t color, int node) const { return node < 0 ? -1 : fedge[color][node]; }
  int e(std::size_t color, int node) const { return node < 0 ? -1 : eedge[color][node]; }

  /// True iff e_i(node) = 0 for every color i.
  bool is_highest_weight(int node) const;

  /// Append a node; edges are added separately.
  int add_node(std::string id, Weight w, std::vector<ExtInt> eps_row, std::vector<ExtInt> phi_row);
  void add_edge(std::size_t color, int from, int to);

  /// Recompute eps/phi as the exact counts of applicable e/f steps.
  void make_seminormal();

  friend bool operator==(const Crystal&, const Crystal&) = default;
};

/// One violated crystal axiom, pinpointing node and color.
struct ValidationIssue {
  std::string node;
  std::string color;
  std::string axiom;
  std::string detail;
};

/// The chain B(n) = {x^i y^(n-i) | 0 <= i <= n}; node order y^n, xy^(n-1), ...
Crystal build_Bn(std::int64_t n);

/// The singleton crystal T_lambda with eps = phi = -inf (not seminormal).
Crystal build_T(const Weight& lambda);
Crystal build_T_sl2(std::int64_t lambda);

/// Every invariant of the crystal axioms, checked on every node and color.
std::vector<ValidationIssue> validate(const Crystal& c);

/// Arrow reversal: e(b^) = (f b)^, wt(b^) = -wt(b), eps(b^) = phi(b).
Crystal dual(const Crystal& c);

/// Disjoint union; node ids are suffixed with @0 / @1 to stay unique.
Crystal disjoint_union(const Crystal& a, const Crystal& b);

/// Connected components of the color-forgetting undirected graph, ordered by
/// (highest weight descending, then highest-weight node label).
std::vector<Crystal> components(const Crystal& c);

/// The full subcrystal on a subset of nodes (edges leaving the subset are
/// dropped; the caller is responsible for closure).
Crystal subcrystal(const Crystal& c, const std::vector<int>& nodes);

/// Component structure inside the ambient crystal (node indices).
struct ComponentView {
  int hw_node = -1;            // a node with all e_i undefined, lowest label if several
  std::vector<int> nodes;      // ambient indices, BFS order from hw_node
};
std::vector<ComponentView> component_views(const Crystal& c);

/// Strict morphism: a partial map on nodes commuting with every e_i and f_i
/// (including into and out of zero) and preserving wt/eps/phi where defined.
struct StrictMorphism {
  std::shared_ptr<const Crystal> source;
  std::shared_ptr<const Crystal> target;
  std::vector<int> map;  // source node -> target node or -1

  int apply(int node) const { return node < 0 ? -1 : map[node]; }
  bool is_zero() const;
};

/// Check strictness of an arbitrary assignment.
bool is_strict(const StrictMorphism& m, std::string* why = nullptr);

/// All strict morphisms a -> b, zero morphism first, deterministic order.
/// Refuses with GuardExceeded when |a| * |b| > guard.
std::vector<StrictMorphism> enumerate_strict_morphisms(const Crystal& a, const Crystal& b,
                                                       std::size_t guard = 1024);

/// Structural isomorphism of colored weighted graphs.
std::optional<std::vector<int>> find_isomorphism(const Crystal& a, const Crystal& b);
bool isomorphic(const Crystal& a, const Crystal& b);

/// Result of classifying an irreducible sl2 crystal as B(n) x T_(lambda - n).
struct Sl2Class {
  std::int64_t n = 0;       // chain length - 1
  std::int64_t lambda = 0;  // weight of the highest-weight node
  std::vector<int> chain;   // node indices ordered from the highest-weight node
  StrictMorphism witness;   // from build_Bn(n) x T (standard form) onto the input
};

/// Classifies a finite irreducible sl2 crystal; rejects non-chain graphs.
Sl2Class classify_irreducible_sl2(const Crystal& c);

/// sl2 chains only: node index of x^i y^(n-i) style positions.
int chain_position(const ComponentView& comp, int node);

}  // namespace crysalg

#endif
