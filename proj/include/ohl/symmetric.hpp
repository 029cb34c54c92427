#pragma once

// Permutations, shuffles, the As and Com operad compositions, the
// Malvenuto-Reutenauer structures and the word Hopf algebras.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ohl/exact_linear.hpp"

namespace ohl {

/// One-line word (σ(1),...,σ(n)) of a bijection of [n]. n = 0 is 1_0.
///
/// Composition follows (σ∘τ)(i) = σ(τ(i)); the right action of S_n on
/// k[S_n] is σ·τ = σ∘τ.
struct Permutation {
  std::vector<int> word;

  int size() const { return static_cast<int>(word.size()); }
  int operator()(int i) const { return word[i - 1]; }
  auto operator<=>(const Permutation&) const = default;
};

/// Validates that `word` is a bijection of [n].
Permutation make_permutation(std::vector<int> word);
Permutation identity_permutation(int n);
Permutation inverse(const Permutation& s);
/// (a∘b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

std::string to_text(const Permutation& s);
Permutation parse_permutation(std::string_view text);

/// Order-preserving relabeling of distinct integers. Throws DuplicateEntry.
Permutation standardize(std::span<const int> seq);
/// st(σ(a_1),...,σ(a_p)) for A = {a_1 < ... < a_p}. Throws OutOfRange.
Permutation restrict(const Permutation& s, std::span<const int> subset);
/// σ×τ.
Permutation direct_sum(const Permutation& s, const Permutation& t);
/// Block-reversal inverse; α(σ) = (σ_n,...,σ_1)^{-1}.
Permutation alpha(const Permutation& s);
/// True iff no 0 < i < n has σ([i]) = [i]. Requires n ≥ 1.
bool is_connected(const Permutation& s);
std::vector<Permutation> all_permutations(int n);

// ---------------------------------------------------------------------------
// Shuffles as ordered set partitions.

struct Shuffle {
  std::vector<std::vector<int>> blocks;
  auto operator<=>(const Shuffle&) const = default;
};

std::string to_text(const Shuffle& s);
/// α with α^{-1} = A_1 (increasing), then A_2, ...
Permutation shuffle_to_perm(const Shuffle& s);
/// All shuffles with the given block sizes, in lexicographic order of blocks.
std::vector<Shuffle> shuffles(std::span<const int> sizes);
std::vector<Shuffle> shuffles(int p, int q);
/// shuffle_to_perm over shuffles(p, q); cached and safe to call concurrently.
const std::vector<Permutation>& shuffle_permutations(int p, int q);

struct CosetFactors {
  Permutation first;
  Permutation second;
  Shuffle shuffle;
};

/// σ = (σ_1×σ_2)∘shuffle_to_perm(ξ) with ξ = (σ^{-1}([p]), σ^{-1}(p+[q])).
CosetFactors coset_factorize(const Permutation& s, int p);

// ---------------------------------------------------------------------------
// Operad compositions.

/// μ_As(σ; τ_1,...,τ_n): substitute τ_i (shifted) for the value σ_i.
/// Throws ArityMismatch.
Permutation as_compose(const Permutation& s, std::span<const Permutation> parts);

/// X^n ·̂ X^m = C(n+m, n) X^{n+m}.
struct ComTerm {
  Rational coeff;
  int degree;
  bool operator==(const ComTerm&) const = default;
};
ComTerm com_hat_product(int n, int m);
/// Trivial-action variant: X^n · X^m = X^{n+m}.
ComTerm com_trivial_product(int n, int m);

// ---------------------------------------------------------------------------
// Malvenuto-Reutenauer structures.

using PermComb = LinComb<Permutation>;
using PermTensor = TensorComb<Permutation, Permutation>;

/// σ ∗̂ τ = Σ_{ξ ∈ Sh(p,q)} (σ×τ)∘ξ.
PermComb mr_product(const Permutation& s, const Permutation& t);
PermComb mr_product(const PermComb& a, const PermComb& b);
PermComb concat_product(const Permutation& s, const Permutation& t);
PermComb concat_product(const PermComb& a, const PermComb& b);

/// Σ_i st(σ_1..σ_i) ⊗ st(σ_{i+1}..σ_n).
PermTensor mr_bar_coproduct(const Permutation& s);
/// Σ_{S⊔T=[n]} σ|_S ⊗ σ|_T.
PermTensor mr_hat_coproduct(const Permutation& s);
/// Tagged As coproduct Σ_{S⊔T=[n]} σ|_S ⊗ σ|_T ⊗ (S,T).
PermTensor as_twisted_coproduct(const Permutation& s);

/// All (S,T) with S ⊔ T = [n], S and T sorted, ordered by the bitmask of S.
std::vector<ShuffleTag> subset_splits(int n);

/// (m⊗n⊗(I,J))·σ = m·σ|_{σ^{-1}(I)} ⊗ n·σ|_{σ^{-1}(J)} ⊗ (σ^{-1}(I), σ^{-1}(J)).
/// `act_left`/`act_right` are the right actions on the factors.
template <class L, class R, class ActL, class ActR>
TensorBasis<L, R> shuffle_tensor_action(const TensorBasis<L, R>& t, const Permutation& s,
                                        ActL&& act_left, ActR&& act_right) {
  if (!t.tag) throw Error(ErrorKind::InvalidValue, "tensor action needs a tag");
  const int n = s.size();
  if (static_cast<int>(t.tag->first.size() + t.tag->second.size()) != n)
    throw Error(ErrorKind::DegreeMismatch, "tag size differs from permutation size");
  Permutation inv = inverse(s);
  auto preimage = [&](const std::vector<int>& set) {
    std::vector<int> out;
    out.reserve(set.size());
    for (int v : set) out.push_back(inv(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  ShuffleTag tag{preimage(t.tag->first), preimage(t.tag->second)};
  return TensorBasis<L, R>{act_left(t.left, restrict(s, tag.first)),
                           act_right(t.right, restrict(s, tag.second)), std::move(tag)};
}

TensorBasis<Permutation, Permutation> shuffle_tensor_action(
    const TensorBasis<Permutation, Permutation>& t, const Permutation& s);

// ---------------------------------------------------------------------------
// Words over a letter alphabet.

struct Word {
  std::string letters;
  int size() const { return static_cast<int>(letters.size()); }
  auto operator<=>(const Word&) const = default;
};

/// Letters as is; the empty word prints as ε.
std::string to_text(const Word& w);
/// Accepts lowercase letters, or ε / "" for the empty word.
Word parse_word(std::string_view text);

using WordComb = LinComb<Word>;
using WordTensor = TensorComb<Word, Word>;

WordComb word_shuffle(const Word& a, const Word& b);
WordComb word_concat(const Word& a, const Word& b);
WordTensor word_deconcat(const Word& w);
WordTensor word_unshuffle(const Word& w);
/// All words of length n over the first `alphabet` letters a, b, ...
std::vector<Word> all_words(int n, int alphabet);

}  // namespace ohl
