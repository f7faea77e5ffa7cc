#ifndef CRYSALG_SET_BIALGEBRA_HPP
#define CRYSALG_SET_BIALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crysalg/mono.hpp"

namespace crysalg {

/// A basis element of the set-level crystal bialgebra: b (x) bd^ with
/// b, bd in B(alpha).  The dual slot is stored undualized.
struct BElem {
  std::int64_t alpha = 0;
  Mono b;
  Mono bd;

  std::string label() const;
  friend auto operator<=>(const BElem&, const BElem&) = default;
};

/// The unit b0 (x) b0^.
BElem sunit();

/// All basis elements of blocks alpha <= cutoff, ordered.
std::vector<BElem> all_belems(std::int64_t cutoff);

/// Comultiplication.  The B(0) insertion happens at the dual-slot node, which
/// keeps the map coassociative and multiplicative against smul.
std::pair<BElem, BElem> sdelta(const BElem& x);

/// Multiplication: both component images must land in matching components of
/// the decomposition, else zero.
std::optional<BElem> smul(const BElem& x, const BElem& y);

/// A comodule in pointed sets: a carrier with a nowhere-zero coaction into
/// (basis element, carrier element).
struct SetComodule {
  std::vector<std::string> carrier;
  std::vector<std::optional<std::pair<BElem, int>>> coaction;

  int index_of(const std::string& id) const;
};

/// Coassociativity and the nowhere-zero requirement, elementwise.
std::vector<std::string> verify_comodule(const SetComodule& m);

/// The standard coaction b -> (b (x) u_alpha^) (x) u_alpha on B(alpha).
SetComodule coaction_B(std::int64_t alpha);

/// Its extension to B(n) (x) T_lambda.
SetComodule coaction_BnT(std::int64_t n, std::int64_t lambda);

/// The two-point comodule {a, b} whose singleton {a} is not a subcomodule.
SetComodule counterexample_comodule();

/// The subcomodule of elements fixed in the form (u (x) u^) (x) c.
SetComodule hatC(const SetComodule& m);

/// Restriction to a sub-carrier; nullopt when the coaction leaves the subset.
std::optional<SetComodule> restrict_comodule(const SetComodule& m, const std::vector<int>& subset);

/// Exhaustive search over all pointed maps eps: blocks <= cutoff -> B(0);
/// true iff none satisfies both counit squares.
bool no_counit_exists(std::int64_t cutoff);

/// True iff no seminormal sl2 crystal structure on two points has the
/// counterexample's coaction as its canonical coaction while making the
/// singleton {b} a full component (strict inclusion).
bool counterexample_admits_no_strict_split();

/// The per-component decomposition coaction on F(B(alpha) (x) B(beta)).
SetComodule decomposition_coaction(std::int64_t alpha, std::int64_t beta);

/// The coaction induced through the multiplication; zero off the top
/// component, so it is not a comodule and differs from the one above.
std::vector<std::optional<std::pair<BElem, int>>> induced_coaction_mul(std::int64_t alpha,
                                                                       std::int64_t beta);

/// Multiplication built on the crystal commutor instead of the plain twist.
std::optional<BElem> mu_prime(const BElem& x, const BElem& y);

/// The two composites of the compatibility square for mu_prime; they differ
/// already on x^n (x) y^n-slot inputs.
std::optional<std::pair<BElem, BElem>> sigma_square_top(const BElem& x, const BElem& y);
std::optional<std::pair<BElem, BElem>> sigma_square_bottom(const BElem& x, const BElem& y);

}  // namespace crysalg

#endif
