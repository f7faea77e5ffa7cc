#ifndef CRYSALG_COMODULE_HPP
#define CRYSALG_COMODULE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crysalg/crystal.hpp"
#include "crysalg/intcomb.hpp"
#include "crysalg/linear_bialgebra.hpp"
#include "crysalg/set_bialgebra.hpp"

namespace crysalg {

using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

bool mat_eq(const IntMat& a, const IntMat& b);

/// Operator label A^alpha_{b,b'}; omitted keys are the zero operator.
struct OpKey {
  std::int64_t alpha = 0;
  Mono b;
  Mono bp;
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

/// A comodule of the linearized bialgebra, stored as its finitely-supported
/// operator family on a free basis e_0..e_(rank-1).
struct LinComodule {
  std::int64_t rank = 0;
  std::map<OpKey, IntMat> ops;

  IntMat op(const OpKey& k) const;
  /// A_{b,b'} applied after A_{b,b''} style composition: matrix product.
};

/// The two comodule relations, exact; empty report = valid.
std::vector<std::string> check_comodule(const LinComodule& m);

/// The standard comodule on ZB(alpha): A^alpha_{b,b'} maps e_b to e_b'.
LinComodule standard_comodule(std::int64_t alpha);

LinComodule direct_sum(const LinComodule& a, const LinComodule& b);

/// Extracts the operator family from a coaction table (basis vector ->
/// combination of basis pair (x) basis vector); throws std::invalid_argument
/// with the first violated relation.
LinComodule coaction_to_operators(std::int64_t rank,
                                  const std::vector<IntComb<std::pair<BasisPair, int>>>& table);

/// Basis of the column lattice of an integer matrix (column-style Hermite
/// normal form); for an idempotent this is a basis of its image.
IntMat column_lattice_basis(const IntMat& a);

struct Classification {
  std::map<std::int64_t, std::int64_t> multiplicity;  // alpha -> r_alpha
  // explicit isomorphism from the direct sum of standard comodules: column
  // (alpha, node position, copy) -> vector in the classified comodule
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> columns;
  IntMat iso;  // rank x rank, unimodular
};

/// Ranks and basis transport per the classification theorem; throws on
/// invalid comodules.
Classification classify(const LinComodule& m);

/// A comodule with a compatible free basis partition.
struct BasedComodule {
  LinComodule m;
  // basis index -> (alpha, node) of its partition class
  std::vector<std::pair<std::int64_t, Mono>> cls;
  std::vector<std::string> labels;  // basis labels (crystal node ids)
};

std::vector<std::string> check_based(const BasedComodule& bm);

/// Crystals (disjoint unions of the B(n)) to based comodules and back.
BasedComodule crystal_to_based(const Crystal& x);
Crystal based_to_crystal(const BasedComodule& bm);

/// Tensor of based comodules through the bialgebra product.
BasedComodule based_tensor(const BasedComodule& a, const BasedComodule& b);

/// The compatibility criterion between a linear comodule with distinguished
/// basis and a set-level comodule on that basis.
bool compatibility_check(const LinComodule& m, const SetComodule& setc);

/// The square connecting the coalgebra structures of B(alpha) and B(-alpha)
/// through the antimorphism S; use_S = false is the negative control.
bool s_diagram_check(std::int64_t alpha, bool use_S = true);

}  // namespace crysalg

#endif
