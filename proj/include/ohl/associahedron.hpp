#pragma once

// Planar trees (faces of associahedra), the tridendriform compositions,
// sector insertion, the tree coproducts and the maps φ, θ, ψ, ψ₀.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ohl/exact_linear.hpp"
#include "ohl/permutohedron.hpp"
#include "ohl/symmetric.hpp"

namespace ohl {

/// Leaf `|` (no children) or a node with at least two children.
struct PlanarTree {
  std::vector<PlanarTree> children;

  bool is_leaf() const { return children.empty(); }
  int leaves() const;
  /// leaves - 1.
  int degree() const { return leaves() - 1; }
  int internal_vertices() const;
  bool is_binary() const;

  std::strong_ordering operator<=>(const PlanarTree& o) const;
  bool operator==(const PlanarTree& o) const { return children == o.children; }
};

using TreeComb = LinComb<PlanarTree>;
using TreeTensor = TensorComb<PlanarTree, PlanarTree>;

PlanarTree leaf();
/// ∨(t_1,...,t_k). Throws BadArity for k < 2.
PlanarTree graft(std::vector<PlanarTree> children);
/// ∨(|,|).
PlanarTree tree_y();
/// ∨(|,...,|) with k leaves.
PlanarTree corolla(int k);

/// `|` or `(c1 c2 ... ck)` with single spaces.
std::string to_text(const PlanarTree& t);
PlanarTree parse_tree(std::string_view text);

/// Planar trees with n+1 leaves.
std::vector<PlanarTree> all_trees(int n);
/// Planar binary trees with n+1 leaves.
std::vector<PlanarTree> all_binary_trees(int n);

// ---------------------------------------------------------------------------
// Tridendriform compositions.

/// g(x, y) by the inductive rules; generator names match Generator.
TreeComb td_compose(Generator g, const PlanarTree& x, const PlanarTree& y);
TreeComb td_compose(Generator g, const TreeComb& x, const TreeComb& y);
/// x*y = x·y + x≺y + x≻y, with | a two-sided unit.
TreeComb star(const PlanarTree& x, const PlanarTree& y);
TreeComb star(const TreeComb& x, const TreeComb& y);

/// The tree in T_2 representing a generator: ≺ = (| (| |)), ≻ = ((| |) |),
/// · = (| | |).
PlanarTree generator_tree(Generator g);

/// x ∘_i y for 1 ≤ i ≤ degree(x). Throws BadSector.
TreeComb sector_insert(const PlanarTree& x, int sector, const PlanarTree& y);

// ---------------------------------------------------------------------------
// Coproducts.

/// Δ(t) = |⊗t + Σ ∨(t_{1(1)},...,t_{k(1)}) ⊗ t_{1(2)}*...*t_{k(2)}.
TreeTensor tree_coproduct(const PlanarTree& t);
/// barΔ(∨(t_1..t_k)) = |⊗t + Σ ∨(t_1..t_{k-1},t_{k(a)}) ⊗ t_{k(b)}.
TreeTensor tree_bar_coproduct(const PlanarTree& t);
/// s grafted on the rightmost leaf of t.
PlanarTree backslash(const PlanarTree& t, const PlanarTree& s);

// ---------------------------------------------------------------------------
// Maps between the families.

/// φ(P) = ∨(φ(P∩I_0),...,φ(P∩I_j)) where P_1 = {i_1<...<i_j}; φ(∅) = |.
PlanarTree phi(const SetComposition& p);
/// φ on degree-0 faces.
PlanarTree phi0(const Permutation& s);
/// φ of the reversed composition.
PlanarTree theta(const SetComposition& p);
/// Sum of the fiber φ^{-1}(t).
ScComb psi(const PlanarTree& t);
/// Sum of the fiber φ₀^{-1}(t). Throws NotBinary.
PermComb psi0(const PlanarTree& t);

/// t if every internal vertex is binary, else 0.
TreeComb dend_projection(const PlanarTree& t);
/// s *_Y t = π(s≺t + s≻t) on binary trees.
TreeComb dend_product(const PlanarTree& s, const PlanarTree& t);
/// (π⊗π)∘Δ.
TreeTensor dend_coproduct(const PlanarTree& t);

}  // namespace ohl
