#ifndef CRYSALG_LINEAR_BIALGEBRA_HPP
#define CRYSALG_LINEAR_BIALGEBRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crysalg/intcomb.hpp"
#include "crysalg/set_bialgebra.hpp"

namespace crysalg {

/// Basis of the linearized bialgebra: same pairs as the set level.
using BasisPair = BElem;
using BComb = IntComb<BasisPair>;
using BPairComb = IntComb<std::pair<BasisPair, BasisPair>>;

BComb bb_unit();

/// Bilinear extension of the component-matching product.
BComb bb_mul(const BComb& x, const BComb& y);

/// Delta(b (x) b'^) = sum_c (b (x) c^) (x) (c (x) b'^).
BPairComb bb_delta(const BComb& x);

/// eps(b (x) b'^) = delta_{b,b'}.
std::int64_t bb_counit(const BComb& x);

/// Which of the two coevaluation/evaluation pairs is meant.
enum class Side { left, right };

/// Side::left is iota : 1 -> sum_b b^ (x) b (pairs stored as (dual slot, primal));
/// Side::right is iota' : 1 -> sum_b b (x) b^ (pairs stored as (primal, dual slot)).
IntComb<std::pair<Mono, Mono>> coeval(std::int64_t alpha, Side side);

/// eps(b (x) c^) = delta_{b,c} on Side::right slots; eps'(c^ (x) b) likewise.
std::int64_t eval_pair(Side side, const Mono& first, const Mono& second);

/// Both rigidity zig-zags are the identity on the basis of B(alpha).
bool zigzag_check(std::int64_t alpha);
/// Negative control: drops one coevaluation term, so the zig-zag must fail.
bool zigzag_check_corrupted(std::int64_t alpha);

/// deg(b (x) b'^) = wt(b) - wt(b').
std::int64_t degree(const BasisPair& p);
std::map<std::int64_t, BComb> grade(const BComb& x);

/// Generator letters; internally a = x (x) x^, b = y (x) x^, c = x (x) y^,
/// d = y (x) y^ as displayed in the presentation.
enum class Gen { a, b, c, d };
using Word = std::vector<Gen>;

/// The two supported letter conventions: "paper" keeps the generator table,
/// "matrix" swaps which of y (x) x^ / x (x) y^ prints as b vs c, which makes
/// the comultiplication read Delta(a) = a (x) a + b (x) c.
enum class LabelConvention { paper, matrix };

BasisPair gen_elem(Gen g);
Word parse_word(const std::string& s, LabelConvention conv = LabelConvention::paper);
std::string word_str(const Word& w, LabelConvention conv = LabelConvention::paper);

/// Fold of bb_mul over the letters; a single basis pair or zero.
BComb word_to_basis(const Word& w);

/// a^r c^(i-r) d^j when i >= r, a^i b^(r-i) d^s when i <= r.
Word basis_to_normal_form(const BasisPair& p);

/// Surjectivity of length-alpha words onto block alpha.
bool fundamental_generation_check(std::int64_t alpha);

/// S: b (x) b'^ -> b' (x) b^ within the block (sl2: w0 twist is trivial).
BasisPair antimorphism_S(const BasisPair& p);
BComb s_linear(const BComb& x);

/// The identification B (x) A = sum_alpha B(alpha) (x) Hom(B(alpha), A) and
/// coassociativity of the comonadic Delta on V, exercised on basis vectors.
bool v_functor_check(std::int64_t cutoff, std::int64_t rank);

}  // namespace crysalg

#endif
