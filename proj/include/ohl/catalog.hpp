#pragma once

// Named twisted and graded structures built from the module operations.

#include <compare>
#include <string>
#include <string_view>

#include "ohl/associahedron.hpp"
#include "ohl/bialgebra_lab.hpp"
#include "ohl/permutohedron.hpp"
#include "ohl/symmetric.hpp"

namespace ohl {

/// Basis X^n of the Com S-module (trivial action).
struct ComMonomial {
  int degree = 0;
  auto operator<=>(const ComMonomial&) const = default;
};

std::string to_text(const ComMonomial& x);
ComMonomial parse_com_monomial(std::string_view text);

/// k[S_n] with the concatenation product "concat" and the tagged
/// coproduct Σ σ|_S ⊗ σ|_T ⊗ (S,T).
TwistedStructure<Permutation> as_structure();

/// Set compositions with products "wf", "wg", "dot", "prec", "succ"
/// (CTD rules, or Pi rules for "wg") and "concat" (⋆), and the tagged
/// coproduct Δ. `dropped` disables one composition rule.
TwistedStructure<SetComposition> comp_structure(RuleBranch dropped = RuleBranch::none);

/// Set compositions with products "concat" and "wf" and the coproduct δ.
TwistedStructure<SetComposition> ps_structure();

/// Degree-0 faces as permutations: product m_Z ("mz"), coproduct Δ_Z,
/// action σ·τ = τ^{-1}σ.
TwistedStructure<Permutation> zin_structure();

/// X^n with the trivial action, product X^n·X^m = X^{n+m} ("mul") and
/// tagged coproduct Σ_{S⊔T} X^{|S|} ⊗ X^{|T|} ⊗ (S,T).
TwistedStructure<ComMonomial> com_structure();

/// Planar trees with "star", "prec", "succ", "dot"; coproduct Δ_T, or barΔ_T
/// when `bar` is set.
GradedStructure<PlanarTree> td_structure(bool bar);

/// Binary trees with "dend" (*_Y) and Δ_Y.
GradedStructure<PlanarTree> dend_structure();

/// Words over `alphabet` letters with "shuffle" and "concat"; coproduct
/// deconcatenation, or unshuffle when `unshuffle` is set.
GradedStructure<Word> words_structure(int alphabet, bool unshuffle);

}  // namespace ohl
