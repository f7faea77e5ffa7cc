#ifndef CRYSALG_DUAL_ALGEBRA_HPP
#define CRYSALG_DUAL_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crysalg/comodule.hpp"

namespace crysalg {

/// Symbolic generators for elements of the full dual with infinite support.
enum class SymGen { e, f, wt };

/// An element of the dual algebra, materialized blockwise.  Finite-support
/// elements carry only blocks; the four symbolic families (and their closed
/// products) carry a tail that is evaluated lazily per block.  The block-n
/// coefficient matrix has entry (b, b') = coefficient of hat(b (x) b'^), so
/// multiplication is literal matrix multiplication.
struct DualElem {
  std::map<std::int64_t, IntMat> blocks;

  struct TailTerm {
    std::int64_t coeff = 1;
    std::vector<SymGen> word;  // empty word = the unit family
  };
  std::optional<std::vector<TailTerm>> tail;

  bool finite() const { return !tail.has_value(); }
  IntMat block(std::int64_t n) const;
  bool block_zero(std::int64_t n) const { return block(n).cwiseAbs().sum() == 0; }
};

/// Coefficient matrix of a single generator on block n.
IntMat sym_block(SymGen g, std::int64_t n);

DualElem dual_zero();
/// The unit sum over every block (symbolic).
DualElem dual_unit();
/// The generalized unit 1_alpha (finite).
DualElem unit_1(std::int64_t alpha);
DualElem unit_sum(std::int64_t cutoff);
/// hat(b (x) b'^) as an element.
DualElem hat_elem(const BasisPair& p);

DualElem dual_add(const DualElem& x, const DualElem& y);
DualElem dual_scale(const DualElem& x, std::int64_t s);
DualElem dual_mul(const DualElem& x, const DualElem& y);

struct KashiwaraElements {
  DualElem e_tilde;
  DualElem f_tilde;
  DualElem wt;
};
/// The symbolic families with blocks <= cutoff materialized.
KashiwaraElements kashiwara_elements(std::int64_t cutoff);

/// Commutator relations and the word-evaluation table, blocks <= cutoff.
std::vector<std::string> relation_check(std::int64_t cutoff);

/// prod_i (1_alpha - e_i f_i): the matrix unit at the highest-weight node.
DualElem hw_projector(std::int64_t alpha);

/// hat(b (x) b'^) as a word in the per-block Kashiwara elements and the
/// highest-weight projector; e_steps/f_steps found by BFS on B(alpha).
struct GeneratorWord {
  std::int64_t e_steps = 0;
  std::int64_t f_steps = 0;
  DualElem value;
};
GeneratorWord generator_word(std::int64_t alpha, const Mono& b, const Mono& bp);

/// The restricted comultiplication Delta^alpha_{beta,beta'} of a matrix unit.
IntComb<std::pair<BasisPair, BasisPair>> delta_restricted(std::int64_t beta, std::int64_t betap,
                                                          const BasisPair& hat);

/// <b (x) b', hat(d (x) d')> = delta delta, bilinear; u must be finite.
std::int64_t pairing(const BComb& x, const DualElem& u);

/// A module over the dual in its finite-support category: the action
/// matrices of the matrix units (same data as a comodule's operator family).
struct UModule {
  std::int64_t rank = 0;
  std::map<OpKey, IntMat> act;
};

UModule module_from_comodule(const LinComodule& c);
LinComodule comodule_from_module(const UModule& m);
/// sum_alpha 1_alpha . m = m on every basis vector.
bool unital_check(const UModule& m);

}  // namespace crysalg

#endif
