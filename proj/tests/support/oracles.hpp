#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// the library routine it is meant to cross-check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "ohl/catalog.hpp"

namespace oracle {

using ohl::Rational;

inline std::vector<std::vector<int>> permutation_words(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// No proper prefix of positions maps onto a prefix of values, by set comparison.
inline std::int64_t connected_count(int n) {
  std::int64_t count = 0;
  for (const auto& w : permutation_words(n)) {
    bool connected = true;
    for (int i = 1; i < n && connected; ++i) {
      std::set<int> values(w.begin(), w.begin() + i);
      std::set<int> prefix;
      for (int k = 1; k <= i; ++k) prefix.insert(k);
      if (values == prefix) connected = false;
    }
    count += connected ? 1 : 0;
  }
  return count;
}

/// Ordered set partitions of [n], each as a vector of block labels (label of
/// element i is the index of its block); blocks are numbered 0..k-1 and all used.
inline std::vector<std::vector<int>> block_labelings(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> lab(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      int k = n == 0 ? 0 : *std::max_element(lab.begin(), lab.end()) + 1;
      std::vector<bool> used(static_cast<std::size_t>(k), false);
      for (int l : lab) used[static_cast<std::size_t>(l)] = true;
      if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) out.push_back(lab);
      return;
    }
    for (int l = 0; l < n; ++l) {
      lab[static_cast<std::size_t>(i)] = l;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline std::int64_t ordered_bell(int n) { return static_cast<std::int64_t>(block_labelings(n).size()); }

/// Not expressible as a concatenation: no k such that the first k blocks hold exactly {1..m}.
inline std::int64_t reduced_count(int n) {
  std::int64_t count = 0;
  for (const auto& lab : block_labelings(n)) {
    int k = *std::max_element(lab.begin(), lab.end()) + 1;
    bool reduced = true;
    for (int split = 1; split < k && reduced; ++split) {
      int m = 0;
      for (int l : lab) m += l < split ? 1 : 0;
      bool prefix = true;
      for (int e = 0; e < n; ++e)
        if ((lab[static_cast<std::size_t>(e)] < split) != (e < m)) prefix = false;
      if (prefix) reduced = false;
    }
    count += reduced ? 1 : 0;
  }
  return count;
}

/// Planar trees with `leaves` leaves and all internal arities >= 2, counted by
/// splitting off the root: sequences of >= 2 subtrees.
inline std::vector<std::int64_t> tree_counts_by_leaves(int max_leaves) {
  std::vector<std::int64_t> t(static_cast<std::size_t>(max_leaves + 1), 0);
  // seq[j][l]: sequences of j trees with l leaves in total.
  std::vector<std::vector<std::int64_t>> seq(static_cast<std::size_t>(max_leaves + 1),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(max_leaves + 1), 0));
  seq[0][0] = 1;
  for (int l = 1; l <= max_leaves; ++l) {
    if (l == 1) {
      t[1] = 1;
    } else {
      std::int64_t sum = 0;
      for (int j = 2; j <= l; ++j) {
        // seq[j][l] uses trees with fewer than l leaves only.
        std::int64_t s = 0;
        for (int first = 1; first < l; ++first) s += t[static_cast<std::size_t>(first)] * seq[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l - first)];
        sum += s;
      }
      t[static_cast<std::size_t>(l)] = sum;
    }
    for (int j = 1; j <= max_leaves; ++j) {
      std::int64_t s = 0;
      for (int first = 1; first <= l; ++first) s += t[static_cast<std::size_t>(first)] * seq[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l - first)];
      seq[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] = s;
    }
  }
  return t;
}

/// Trees of degree n whose root's last child is a leaf: deleting that leaf
/// leaves either the lone first child (root arity 2) or a root of arity >= 2.
inline std::int64_t right_flag_count(int n) {
  auto t = tree_counts_by_leaves(n + 1);
  const std::int64_t any = t[static_cast<std::size_t>(n)];
  return 2 * any - (n == 1 ? 1 : 0);
}

/// Coefficients of 1 - 1/(1 + F(x)), F = Σ f_n x^n.
inline std::vector<std::int64_t> generators_by_inversion(const std::vector<std::int64_t>& f) {
  const std::size_t N = f.size();
  std::vector<std::int64_t> inv(N + 1, 0);  // 1/(1+F)
  inv[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    std::int64_t s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += f[k - 1] * inv[n - k];
    inv[n] = -s;
  }
  std::vector<std::int64_t> g(N);
  for (std::size_t n = 1; n <= N; ++n) g[n - 1] = -inv[n];
  return g;
}

inline std::int64_t binomial(int n, int k) {
  std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j)
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] + c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// σ ∗̂ τ: all words of size p+q whose values <= p read σ and whose values > p read τ shifted.
inline ohl::PermComb mr_product(const ohl::Permutation& s, const ohl::Permutation& t) {
  const int p = s.size(), q = t.size();
  ohl::PermComb out;
  for (const auto& w : permutation_words(p + q)) {
    std::vector<int> low, high;
    for (int v : w) (v <= p ? low : high).push_back(v <= p ? v : v - p);
    if (low == s.word && high == t.word) out.add(ohl::Permutation{w}, 1);
  }
  return out;
}

/// Dense Gaussian elimination over Q, column by column.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Rows of a family of combinations as a dense matrix over their joint support.
template <class B>
std::vector<std::vector<Rational>> dense_rows(const std::vector<ohl::LinComb<B>>& rows) {
  std::vector<B> support;
  for (const auto& r : rows)
    for (const auto& [b, c] : r) support.push_back(b);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> row(support.size(), Rational(0));
    for (std::size_t i = 0; i < support.size(); ++i) row[i] = r.coeff(support[i]);
    m.push_back(std::move(row));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Set composition coproduct by the generator recursion: Δ is the algebra
// morphism for the composition operations with Δ((1)) = (1)⊗∅ + ∅⊗(1),
// where operations act on the tensor square by
//   x(P1⊗P2, Q1⊗Q2) = ∅⊗x(P2,Q2)                          if P1 = Q1 = ∅,
//                     x(P1,Q1)⊗w(P2,Q2)⊗(S1∪(p+S2), T1∪(p+T2)) otherwise.

using ohl::ScTensor;
using ohl::SetComposition;
using ohl::ShuffleTag;

inline ScTensor square_compose(ohl::Generator g, const ScTensor& x, const ScTensor& y,
                               ohl::RuleBranch dropped = ohl::RuleBranch::none) {
  ScTensor out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      const int p = u.left.size() + u.right.size();
      ShuffleTag tag = *u.tag;
      for (int s : v.tag->first) tag.first.push_back(p + s);
      for (int s : v.tag->second) tag.second.push_back(p + s);
      if (u.left.empty() && v.left.empty()) {
        for (const auto& [r, cr] : ohl::ctd_compose(g, u.right, v.right, dropped))
          out.add({SetComposition{}, r, tag}, cu * cv * cr);
        continue;
      }
      for (const auto& [l, cl] : ohl::ctd_compose(g, u.left, v.left, dropped))
        for (const auto& [r, cr] : ohl::w_product(u.right, v.right, {ohl::CompositionKind::ctd, dropped}))
          out.add({l, r, tag}, cu * cv * cl * cr);
    }
  return out;
}

inline SetComposition interval_composition(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int s : sizes) {
    std::vector<int> b;
    for (int i = 0; i < s; ++i) b.push_back(next++);
    blocks.push_back(b);
  }
  return ohl::make_set_composition(blocks);
}

/// Also checks that each recursion step really rebuilds its argument.
/// `dropped` disables one composition rule, for mutation runs.
inline ScTensor interval_coproduct(const std::vector<int>& sizes, bool& decomposition_ok,
                                   ohl::RuleBranch dropped = ohl::RuleBranch::none) {
  if (sizes.empty()) return ScTensor(ohl::TensorBasis<SetComposition, SetComposition>{{}, {}, ShuffleTag{}});
  if (sizes.size() == 1 && sizes[0] == 1) {
    SetComposition one = interval_composition({1});
    ScTensor d;
    d.add({one, SetComposition{}, ShuffleTag{{1}, {}}}, 1);
    d.add({SetComposition{}, one, ShuffleTag{{}, {1}}}, 1);
    return d;
  }
  const SetComposition target = interval_composition(sizes);
  if (sizes.size() == 1) {
    // (n) = dot((1), (n-1))
    if (ohl::ctd_compose(ohl::Generator::dot, interval_composition({1}), interval_composition({sizes[0] - 1}),
                         dropped) != ohl::ScComb(target))
      decomposition_ok = false;
    return square_compose(ohl::Generator::dot, interval_coproduct({1}, decomposition_ok, dropped),
                          interval_coproduct({sizes[0] - 1}, decomposition_ok, dropped), dropped);
  }
  // (I_1, ..., I_k) = prec((I_1), (I_2, ..., I_k))
  std::vector<int> rest(sizes.begin() + 1, sizes.end());
  if (ohl::ctd_compose(ohl::Generator::prec, interval_composition({sizes[0]}), interval_composition(rest), dropped) !=
      ohl::ScComb(target))
    decomposition_ok = false;
  return square_compose(ohl::Generator::prec, interval_coproduct({sizes[0]}, decomposition_ok, dropped),
                        interval_coproduct(rest, decomposition_ok, dropped), dropped);
}

/// P = (I_{l_1},...,I_{l_k})·σ with σ^{-1} listing the blocks of P in order.
inline ScTensor recursive_coproduct(const SetComposition& P, bool& decomposition_ok,
                                    ohl::RuleBranch dropped = ohl::RuleBranch::none) {
  std::vector<int> sizes;
  std::vector<int> inverse_word;
  for (const auto& b : P.blocks) {
    sizes.push_back(static_cast<int>(b.size()));
    inverse_word.insert(inverse_word.end(), b.begin(), b.end());
  }
  std::vector<int> word(inverse_word.size());
  for (std::size_t i = 0; i < inverse_word.size(); ++i)
    word[static_cast<std::size_t>(inverse_word[i] - 1)] = static_cast<int>(i) + 1;
  const ohl::Permutation sigma{word};
  if (ohl::sc_action(interval_composition(sizes), sigma) != P) decomposition_ok = false;
  auto act = [](const SetComposition& c, const ohl::Permutation& s) { return ohl::sc_action(c, s); };
  ScTensor out;
  for (const auto& [t, c] : interval_coproduct(sizes, decomposition_ok, dropped))
    out.add(ohl::shuffle_tensor_action(t, sigma, act, act), c);
  return out;
}

}  // namespace oracle
