#ifndef CRYSALG_COMONAD_HPP
#define CRYSALG_COMONAD_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "crysalg/crystal.hpp"
#include "crysalg/set_bialgebra.hpp"

namespace crysalg {

struct UVal;
using UValPtr = std::shared_ptr<const UVal>;

/// A value of a pointed set in the iterated-U hierarchy: zero, a base element
/// (index into the underlying set), a boxed U element, or a pair (for
/// products of pointed sets).  Zero absorbs pair formation.
struct PVal {
  int base = -1;
  UValPtr boxed;
  std::shared_ptr<const std::pair<PVal, PVal>> pair;

  bool is_zero() const { return base < 0 && !boxed && !pair; }
  static PVal make_zero() { return {}; }
  static PVal make_base(int i);
  static PVal make_boxed(UVal v);
  static PVal make_pair(PVal a, PVal b);
};

/// An element (b)_f of U(A): a copy of B(block) indexed by the map f, at the
/// node b.  f is stored behind a closure; U(U(A)) is never materialized, and
/// two map descriptions compare by evaluating on all of B(block).
struct UVal {
  std::int64_t block = 0;
  Mono node;
  std::function<PVal(const Mono&)> f;
};

bool pval_eq(const PVal& a, const PVal& b);
bool uval_eq(const UVal& a, const UVal& b);

/// Enumeration bound: sum over alpha <= cutoff of (|A|+1)^(alpha+1).
std::size_t u_size_bound(std::size_t asize, std::int64_t cutoff);

/// All elements of U(A) for A = {0..asize-1}, blocks up to cutoff.
/// Deterministic order: block, then index map, then node.
std::vector<UVal> u_elements(std::size_t asize, std::int64_t cutoff,
                             std::size_t guard = 1000000);

/// Counit (b)_f -> f(b).
PVal eps_U(const UVal& u);
/// Comultiplication (b)_f -> (b)_{x -> (x)_f}.
UVal delta_U(const UVal& u);
/// U on a pointed map of values; zero when the composed index map vanishes.
PVal map_U(const UVal& u, const std::function<PVal(const PVal&)>& psi);

/// Counit laws and coassociativity, elementwise on U(A).
std::vector<std::string> comonad_laws(std::size_t asize, std::int64_t cutoff,
                                      std::size_t guard = 1000000);

/// The right adjoint G on objects, with per-node copy bookkeeping.
struct GCrystal {
  Crystal crystal;
  std::vector<std::int64_t> block_of;    // node -> alpha
  std::vector<std::vector<int>> map_of;  // node -> index map f (length alpha+1)
  std::vector<std::int64_t> pos_of;      // node -> chain position in its copy

  int find(std::int64_t alpha, const std::vector<int>& f, std::int64_t pos) const;
};
GCrystal functor_G(std::size_t xsize, std::int64_t cutoff, std::size_t guard = 1000000);

/// G on a pointed map psi: X -> Y (indices, -1 = zero): B(a)_f -> B(a)_{psi f}.
StrictMorphism functor_G_on_map(const GCrystal& gx, const GCrystal& gy,
                                const std::vector<int>& psi);

/// Hom_Crys(x, G(y)) = Hom_Set(F x, y) through rho = eps' o F(-), including
/// naturality against every pointed map y -> y + {extra}.
bool adjunction_check(const Crystal& x, std::size_t ysize, std::int64_t cutoff,
                      std::size_t guard = 1000000);

/// The coalgebra structure map of a crystal: b -> (b)_(component inclusion).
std::vector<UVal> zeta_coalgebra(const Crystal& x, std::int64_t cutoff);

/// Rebuilds the crystal from a U-coalgebra via eps o (Kashiwara on U) o zeta;
/// throws std::invalid_argument on invalid coalgebras.
Crystal recover_structure(const std::vector<std::string>& labels, const std::vector<UVal>& zeta,
                          std::int64_t cutoff);

/// theta: U(A) -> B (x) A, (b)_f -> (b (x) u_alpha^) (x) f(u_alpha).
struct ThetaImage {
  bool zero = true;
  BElem elem;
  PVal tail;
};
ThetaImage theta(const UVal& u);

/// The monoidal structure map chi: U(A) x U(B) -> U(A x B).
PVal chi_val(const UVal& u, const UVal& v);
/// The unit I -> U(I) for the singleton pointed set.
UVal chi_unit();

/// The compatibility square and both unit triangles, elementwise.
std::vector<std::string> chi_diagrams(std::size_t asize, std::size_t bsize, std::int64_t cutoff,
                                      std::size_t guard = 1000000);

/// Componentwise equaliser of parallel strict morphisms; also verifies that
/// the forgetful functor preserves it.
Crystal equaliser(const StrictMorphism& f, const StrictMorphism& g);

}  // namespace crysalg

#endif
