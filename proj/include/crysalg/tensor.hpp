#ifndef CRYSALG_TENSOR_HPP
#define CRYSALG_TENSOR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "crysalg/crystal.hpp"

namespace crysalg {

/// Kashiwara tensor product; nodes are ordered pairs of factor nodes.
struct TensorCrystal {
  Crystal crystal;
  std::shared_ptr<const Crystal> left;
  std::shared_ptr<const Crystal> right;
  std::vector<std::pair<int, int>> factor;  // node -> (left node, right node)

  int pair_index(int a, int b) const {
    return a < 0 || b < 0 ? -1 : a * static_cast<int>(right->size()) + b;
  }
};

TensorCrystal tensor(const Crystal& a, const Crystal& b);

/// A connected component together with its sl2 certification.
struct DecompositionPart {
  ComponentView view;           // indices into the ambient crystal
  std::optional<Sl2Class> cls;  // chain certificate, present for sl2 inputs;
                                // its witness maps the standard form into the ambient
};

struct Decomposition {
  std::vector<DecompositionPart> parts;
  std::vector<std::size_t> sizes() const;
};

/// Connected components with highest-weight nodes; for sl2 every part is
/// certified as a chain via classify_irreducible_sl2.
Decomposition decompose(const Crystal& c);
inline Decomposition decompose(const TensorCrystal& t) { return decompose(t.crystal); }

/// Clebsch-Gordan oracle {m+n-2k : 0 <= k <= min(m,n)}, descending.
std::vector<std::int64_t> cg_multiset(std::int64_t m, std::int64_t n);

/// The embedding B(n) -> B(1)^(tensor n), x^i y^j -> x..x y..y (n >= 1).
/// Returns the morphism together with the iterated (left-associated) target.
StrictMorphism embed_Bn(std::int64_t n);

/// Chain-reversal involution, per component; sl2 chains only.
std::vector<int> zeta(const Crystal& c);

/// Cached product table of B(m) (x) B(n): component class and chain position
/// of every node pair, derived from the tensor/decompose machinery.
struct Sl2TensorTable {
  std::int64_t m = 0, n = 0;
  std::vector<std::vector<int>> comp;        // [i][r] -> component index
  std::vector<std::vector<std::int64_t>> pos;  // [i][r] -> position in its chain
  std::vector<std::int64_t> gamma;           // per component: B(gamma)
  // inverse: component, position -> (i, r)
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> node_at;

  /// Component/position of x^i y^(m-i) (x) x^r y^(n-r).
  std::pair<std::int64_t, std::int64_t> locate(const Mono& a, const Mono& b) const;
};

const Sl2TensorTable& sl2_tensor_table(std::int64_t m, std::int64_t n);

/// Image of a (x) b under the decomposition into irreducibles: the block
/// B(gamma) containing it and the corresponding monomial.
std::pair<std::int64_t, Mono> tensor_image(const Mono& a, const Mono& b);

/// Closed four-case commutor formula for x^i y^j (x) x^r y^s in B(n) (x) B(m).
std::pair<Mono, Mono> commutor_sl2(const Mono& a, const Mono& b);

/// The zeta-based definition b (x) b' -> zeta(zeta(b') (x) zeta(b)),
/// computed through the decomposition tables, independent of the formula.
std::pair<Mono, Mono> commutor_oracle(const Mono& a, const Mono& b);

/// The same zeta-based commutor for arbitrary sl2 chain unions A (x) B;
/// returns the factor nodes of the image inside B (x) A.
std::pair<int, int> commutor_nodes(const Crystal& a, const Crystal& b, int na, int nb);

}  // namespace crysalg

#endif
