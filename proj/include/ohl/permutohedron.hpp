#pragma once

// Set compositions (faces of permutohedra), the CTD and Pi compositions,
// the coproducts Δ and δ, and the Zinbiel layer on degree-0 faces.

#include <string>
#include <string_view>
#include <vector>

#include "ohl/exact_linear.hpp"
#include "ohl/symmetric.hpp"

namespace ohl {

/// Ordered sequence of disjoint nonempty sorted blocks.
///
/// A standard composition has label set [n]. The composition rules below
/// work on arbitrary disjoint label sets, which is how relabeled pieces of a
/// coproduct or a shifted right operand are carried around.
struct SetComposition {
  std::vector<std::vector<int>> blocks;

  int size() const;
  int num_blocks() const { return static_cast<int>(blocks.size()); }
  /// n - k.
  int degree() const { return size() - num_blocks(); }
  bool empty() const { return blocks.empty(); }
  auto operator<=>(const SetComposition&) const = default;
};

using ScComb = LinComb<SetComposition>;
using ScTensor = TensorComb<SetComposition, SetComposition>;

/// Validates blocks nonempty, disjoint, union [n]; sorts each block.
SetComposition make_set_composition(std::vector<std::vector<int>> blocks);
/// `{3,4}|{1}|{5,6}|{2}`; the empty composition is `{}`.
std::string to_text(const SetComposition& p);
/// Accepts the text form above and the compact `(34,1,56,2)` form.
SetComposition parse_set_composition(std::string_view text);

/// Relabels the label set order-preservingly onto [n].
SetComposition sc_standardize(const SetComposition& p);
/// (σ^{-1}(P_1), ..., σ^{-1}(P_k)). Throws DegreeMismatch.
SetComposition sc_action(const SetComposition& p, const Permutation& s);
/// Blocks intersected with S, empties dropped, labels kept.
SetComposition sc_intersect(const SetComposition& p, std::span<const int> subset);
/// st(P ∩ S).
SetComposition sc_restrict(const SetComposition& p, std::span<const int> subset);
/// P followed by Q shifted by |P|.
SetComposition sc_concat(const SetComposition& p, const SetComposition& q);
SetComposition sc_shift(const SetComposition& p, int by);
SetComposition sc_reverse(const SetComposition& p);

/// Set compositions of [n], in lexicographic order of their block lists.
std::vector<SetComposition> all_set_compositions(int n);

// ---------------------------------------------------------------------------
// CTD and Pi compositions.

enum class Generator { dot, prec, succ };

const char* generator_name(Generator g);

enum class CompositionKind { ctd, pi };

/// Individual rules of the inductive definition; `dropped` disables one of
/// them (used for mutation testing of the checkers).
enum class RuleBranch {
  none,
  prec_right_unit,
  prec_inductive,
  dot_inductive,
  succ_by_symmetry,
  w_empty_empty,
  w_dot_term,
  w_prec_term,
  w_succ_term,
};

struct CompositionRules {
  CompositionKind kind = CompositionKind::ctd;
  RuleBranch dropped = RuleBranch::none;
};

const std::vector<RuleBranch>& all_rule_branches();
const char* rule_branch_name(RuleBranch b);

/// g(A, B) on compositions with disjoint label sets; labels are kept.
ScComb compose_labeled(Generator g, const SetComposition& a, const SetComposition& b,
                       const CompositionRules& rules);
/// w(A, B) = [dot +] prec + succ with w(∅,∅) = ∅.
ScComb w_labeled(const SetComposition& a, const SetComposition& b, const CompositionRules& rules);

/// g(P, Q) with Q's labels shifted by |P|.
ScComb ctd_compose(Generator g, const SetComposition& p, const SetComposition& q,
                   RuleBranch dropped = RuleBranch::none);
ScComb pi_compose(Generator g, const SetComposition& p, const SetComposition& q,
                  RuleBranch dropped = RuleBranch::none);
/// w_f(P, Q) (CTD) or w_g(P, Q) (Pi), Q shifted.
ScComb w_product(const SetComposition& p, const SetComposition& q, const CompositionRules& rules = {});
/// P ⋆ Q.
ScComb concat_sc_product(const SetComposition& p, const SetComposition& q);

// ---------------------------------------------------------------------------
// Coproducts.

/// Σ_l st(P_1..P_l) ⊗ st(P_{l+1}..P_k) ⊗ (∪_{j≤l} P_j, ∪_{h>l} P_h).
ScTensor sc_coproduct(const SetComposition& p);
/// Σ_{S⊔T=[n]} st(P∩S) ⊗ st(P∩T) ⊗ (S,T).
ScTensor ps_coproduct(const SetComposition& p);

/// False iff P = A ⋆ B with A, B nonempty. Requires n ≥ 1.
bool is_reduced(const SetComposition& p);

// ---------------------------------------------------------------------------
// Degree-0 faces and the Zinbiel structure.

/// ({a_1},...,{a_n}) -> (a_1,...,a_n). Throws NotDegreeZero.
Permutation sc0_to_perm(const SetComposition& p);
SetComposition perm_to_sc0(const Permutation& s);
/// P if degree 0, else 0.
ScComb degree0_projection(const SetComposition& p);
/// degree0_projection followed by the identification with permutations.
PermComb pi_ctd(const SetComposition& p);

/// m_Z(σ,τ) = Σ_{ξ ∈ Sh(p,q)} (σ×τ)∘ξ.
PermComb zin_product(const Permutation& s, const Permutation& t);
PermComb zin_product(const SetComposition& p, const SetComposition& q);
/// Δ_Z: the coproduct of sc0 images, tagged.
PermTensor zin_coproduct(const Permutation& s);
PermTensor zin_coproduct(const SetComposition& p);
/// Twisted right action on degree-0 faces: σ·τ = τ^{-1}∘σ.
Permutation zin_action(const Permutation& s, const Permutation& t);

}  // namespace ohl
