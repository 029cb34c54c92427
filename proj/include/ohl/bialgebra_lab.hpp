#pragma once

// Twisted and graded structures, the hat/bar constructions, axiom checkers,
// primitive dimensions and freeness reports.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ohl/exact_linear.hpp"
#include "ohl/symmetric.hpp"

namespace ohl {

template <class B>
using Product = std::function<LinComb<B>(const B&, const B&)>;
template <class B>
using Coproduct = std::function<TensorComb<B, B>(const B&)>;

template <class B>
struct NamedProduct {
  std::string name;
  Product<B> fn;
};

template <class B>
const Product<B>& find_product(const std::vector<NamedProduct<B>>& products, std::string_view name) {
  for (const auto& p : products)
    if (p.name == name) return p.fn;
  throw Error(ErrorKind::UnknownStructure, "no product named '" + std::string(name) + "'");
}

/// An S-module with twisted products and a tagged coproduct.
template <class B>
struct TwistedStructure {
  std::string name;
  std::function<std::vector<B>(int)> basis;
  std::function<int(const B&)> degree;
  std::function<B(const B&, const Permutation&)> act;
  std::vector<NamedProduct<B>> products;
  Coproduct<B> coproduct;
  B unit;

  const Product<B>& product(std::string_view n) const { return find_product(products, n); }
};

/// A graded space with products and an untagged coproduct.
template <class B>
struct GradedStructure {
  std::string name;
  std::function<std::vector<B>(int)> basis;
  std::function<int(const B&)> degree;
  std::vector<NamedProduct<B>> products;
  Coproduct<B> coproduct;
  B unit;

  const Product<B>& product(std::string_view n) const { return find_product(products, n); }
};

// ---------------------------------------------------------------------------
// Hat and bar constructions.

template <class B>
int homogeneous_degree(const std::function<int(const B&)>& degree, const LinComb<B>& a) {
  int d = -1;
  for (const auto& [b, c] : a) {
    int db = degree(b);
    if (d >= 0 && db != d) throw Error(ErrorKind::InhomogeneousInput, "input mixes degrees");
    d = db;
  }
  return d;
}

/// m(a, b) acted on by the sum of all (p,q)-shuffles.
template <class B>
LinComb<B> hat_product(const TwistedStructure<B>& T, std::string_view op, const B& a, const B& b) {
  const LinComb<B> value = T.product(op)(a, b);
  LinComb<B> out;
  for (const auto& xi : shuffle_permutations(T.degree(a), T.degree(b)))
    for (const auto& [t, c] : value) out.add(T.act(t, xi), c);
  return out;
}

template <class B>
LinComb<B> hat_product(const TwistedStructure<B>& T, std::string_view op, const LinComb<B>& a,
                       const LinComb<B>& b) {
  homogeneous_degree(T.degree, a);
  homogeneous_degree(T.degree, b);
  return bilinear_extend([&](const B& x, const B& y) { return hat_product(T, op, x, y); }, a, b);
}

/// The twisted product itself.
template <class B>
LinComb<B> bar_product(const TwistedStructure<B>& T, std::string_view op, const B& a, const B& b) {
  return T.product(op)(a, b);
}

template <class B>
LinComb<B> bar_product(const TwistedStructure<B>& T, std::string_view op, const LinComb<B>& a,
                       const LinComb<B>& b) {
  return bilinear_extend([&](const B& x, const B& y) { return T.product(op)(x, y); }, a, b);
}

template <class L, class R>
TensorComb<L, R> strip_tags(const TensorComb<L, R>& t) {
  TensorComb<L, R> out;
  for (const auto& [b, c] : t) out.add({b.left, b.right, std::nullopt}, c);
  return out;
}

inline bool is_interval_tag(const ShuffleTag& tag) {
  for (std::size_t i = 0; i < tag.first.size(); ++i)
    if (tag.first[i] != static_cast<int>(i) + 1) return false;
  return true;
}

/// Terms with tag ([p], p+[q]), tag removed.
template <class L, class R>
TensorComb<L, R> interval_terms(const TensorComb<L, R>& t) {
  TensorComb<L, R> out;
  for (const auto& [b, c] : t)
    if (!b.tag || is_interval_tag(*b.tag)) out.add({b.left, b.right, std::nullopt}, c);
  return out;
}

template <class B>
TensorComb<B, B> hat_coproduct(const TwistedStructure<B>& T, const B& a) {
  return strip_tags(T.coproduct(a));
}

template <class B>
TensorComb<B, B> bar_coproduct(const TwistedStructure<B>& T, const B& a) {
  return interval_terms(T.coproduct(a));
}

enum class Sym { hat, bar };

inline const char* sym_name(Sym s) { return s == Sym::hat ? "hat" : "bar"; }

/// Graded structure with the named products symmetrized as requested and
/// the hat or bar coproduct. Products are renamed "hat <op>" / "bar <op>".
template <class B>
GradedStructure<B> symmetrize(const TwistedStructure<B>& T,
                              const std::vector<std::pair<Sym, std::string>>& products, Sym coproduct) {
  GradedStructure<B> G;
  G.name = T.name + "/" + sym_name(coproduct) + "Δ";
  G.basis = T.basis;
  G.degree = T.degree;
  G.unit = T.unit;
  for (const auto& [s, op] : products) {
    std::string opname = op;
    if (s == Sym::hat) {
      G.products.push_back({std::string("hat ") + op,
                            [T, opname](const B& a, const B& b) { return hat_product(T, opname, a, b); }});
    } else {
      G.products.push_back({std::string("bar ") + op,
                            [T, opname](const B& a, const B& b) { return T.product(opname)(a, b); }});
    }
  }
  if (coproduct == Sym::hat) {
    G.coproduct = [T](const B& a) { return hat_coproduct(T, a); };
  } else {
    G.coproduct = [T](const B& a) { return bar_coproduct(T, a); };
  }
  return G;
}

/// Product on the twisted tensor square:
/// (a⊗b⊗ξ_1)(c⊗d⊗ξ_2) = (m(a,c) ⊗ m(b,d) ⊗ (S',T'))·(ξ_1×ξ_2) where
/// S' = [p_1] ∪ (p_1+q_1+[p_2]) places the middle factors after the swap.
template <class B>
TensorComb<B, B> twisted_tensor_product(const TwistedStructure<B>& T, const Product<B>& m,
                                        const TensorComb<B, B>& x, const TensorComb<B, B>& y) {
  TensorComb<B, B> out;
  auto act = [&](const B& b, const Permutation& s) { return T.act(b, s); };
  for (const auto& [u, cu] : x) {
    for (const auto& [v, cv] : y) {
      const int p1 = T.degree(u.left), q1 = T.degree(u.right);
      const int p2 = T.degree(v.left), q2 = T.degree(v.right);
      ShuffleTag tu = u.tag ? *u.tag : ShuffleTag{};
      ShuffleTag tv = v.tag ? *v.tag : ShuffleTag{};
      if (!u.tag)
        for (int i = 1; i <= p1 + q1; ++i) (i <= p1 ? tu.first : tu.second).push_back(i);
      if (!v.tag)
        for (int i = 1; i <= p2 + q2; ++i) (i <= p2 ? tv.first : tv.second).push_back(i);
      Permutation g = direct_sum(shuffle_to_perm(Shuffle{{tu.first, tu.second}}),
                                 shuffle_to_perm(Shuffle{{tv.first, tv.second}}));
      ShuffleTag mid;
      const int n = p1 + q1 + p2 + q2;
      for (int i = 1; i <= n; ++i) {
        bool left = i <= p1 || (i > p1 + q1 && i <= p1 + q1 + p2);
        (left ? mid.first : mid.second).push_back(i);
      }
      const LinComb<B> ml = m(u.left, v.left);
      const LinComb<B> mr = m(u.right, v.right);
      for (const auto& [l, cl] : ml)
        for (const auto& [r, cr] : mr)
          out.add(shuffle_tensor_action(TensorBasis<B, B>{l, r, mid}, g, act, act), cu * cv * cl * cr);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports and parallel execution.

struct ExecPolicy {
  int jobs = 1;
  std::uint64_t seed = 0;
};

struct Witness {
  std::string tuple;
  std::string lhs;
  std::string rhs;
};

struct AxiomResult {
  std::string suite;
  std::string axiom;
  int max_degree = 0;
  bool pass = true;
  std::optional<Witness> witness;
  std::string note;
};

struct CheckReport {
  std::vector<AxiomResult> results;

  bool all_pass() const;
  void add(AxiomResult r) { results.push_back(std::move(r)); }
  void append(const CheckReport& o);
  /// One `PASS`/`FAIL` line per axiom, witness block on failure.
  std::string text() const;
  /// One JSON object per axiom: suite, axiom, degrees, status, witness.
  std::string json_lines() const;
};

/// Runs `test` on indices 0..count-1, visiting them in an order shuffled by
/// `policy.seed` across `policy.jobs` threads, and returns the violation with
/// the smallest index. The result does not depend on jobs or seed.
std::optional<std::pair<std::size_t, Witness>> first_violation(
    std::size_t count, const std::function<std::optional<Witness>(std::size_t)>& test,
    const ExecPolicy& policy);

AxiomResult run_axiom(std::string suite, std::string axiom, int max_degree, std::size_t count,
                      const std::function<std::optional<Witness>(std::size_t)>& test,
                      const ExecPolicy& policy);

template <class T>
std::optional<Witness> compare(const std::string& tuple, const T& lhs, const T& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Witness{tuple, to_text(lhs), to_text(rhs)};
}

// ---------------------------------------------------------------------------
// Tensor helpers.

template <class B>
Rational counit(const B& unit, const B& b) {
  return b == unit ? Rational(1) : Rational(0);
}

template <class B>
TensorComb<B, B> swap_factors(const TensorComb<B, B>& t) {
  TensorComb<B, B> out;
  for (const auto& [b, c] : t) out.add({b.right, b.left, std::nullopt}, c);
  return out;
}

/// Componentwise product (a⊗b)(c⊗d) = ac ⊗ bd.
template <class B>
TensorComb<B, B> tensor_product(const Product<B>& m, const TensorComb<B, B>& x, const TensorComb<B, B>& y) {
  TensorComb<B, B> out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      const LinComb<B> l = m(u.left, v.left);
      if (l.is_zero()) continue;
      const LinComb<B> r = m(u.right, v.right);
      for (const auto& [a, ca] : l)
        for (const auto& [b, cb] : r) out.add({a, b, std::nullopt}, cu * cv * ca * cb);
    }
  return out;
}

template <class B>
TensorComb<B, B> coproduct_of(const Coproduct<B>& delta, const LinComb<B>& a) {
  TensorComb<B, B> out;
  for (const auto& [b, c] : a) out.add_scaled(delta(b), c);
  return out;
}

template <class B>
LinComb<B> product_of(const Product<B>& m, const LinComb<B>& a, const LinComb<B>& b) {
  return bilinear_extend([&](const B& x, const B& y) { return m(x, y); }, a, b);
}

// ---------------------------------------------------------------------------
// Exhaustive tuple spaces.

/// Basis elements of degree 0..max_degree, grouped by degree.
template <class B>
std::vector<std::vector<B>> basis_by_degree(const std::function<std::vector<B>(int)>& basis, int max_degree) {
  std::vector<std::vector<B>> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(basis(d));
  return out;
}

/// All k-tuples of basis elements with total degree ≤ max_degree, ordered by
/// total degree, then the degree vector, then basis position.
template <class B>
std::vector<std::vector<B>> basis_tuples(const std::vector<std::vector<B>>& by_degree, int k, int max_degree) {
  std::vector<std::vector<B>> out;
  std::vector<int> degs(k, 0);
  for (int total = 0; total <= max_degree; ++total) {
    auto rec_deg = [&](auto&& self, int i, int remaining) -> void {
      if (i == k - 1) {
        degs[i] = remaining;
        std::vector<B> cur(k);
        auto fill = [&](auto&& fself, int j) -> void {
          if (j == k) {
            out.push_back(cur);
            return;
          }
          for (const auto& b : by_degree[degs[j]]) {
            cur[j] = b;
            fself(fself, j + 1);
          }
        };
        fill(fill, 0);
        return;
      }
      for (int d = 0; d <= remaining; ++d) {
        degs[i] = d;
        self(self, i + 1, remaining - d);
      }
    };
    if (k == 0) break;
    rec_deg(rec_deg, 0, total);
  }
  return out;
}

template <class B>
std::string tuple_text(const std::vector<B>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += " ; ";
    s += to_text(t[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Axiom checkers.

template <class B>
AxiomResult check_associative(const GradedStructure<B>& G, std::string_view op, int max_degree,
                              const ExecPolicy& policy, std::string suite = "") {
  const auto& m = G.product(op);
  auto tuples = basis_tuples(basis_by_degree(G.basis, max_degree), 3, max_degree);
  return run_axiom(suite.empty() ? G.name : suite, "associative(" + std::string(op) + ")", max_degree,
                   tuples.size(),
                   [&](std::size_t i) {
                     const auto& t = tuples[i];
                     auto lhs = product_of(m, m(t[0], t[1]), LinComb<B>(t[2]));
                     auto rhs = product_of(m, LinComb<B>(t[0]), m(t[1], t[2]));
                     return compare(tuple_text(t), lhs, rhs);
                   },
                   policy);
}

template <class B>
AxiomResult check_unit(const GradedStructure<B>& G, std::string_view op, int max_degree,
                       const ExecPolicy& policy, std::string suite = "") {
  const auto& m = G.product(op);
  auto tuples = basis_tuples(basis_by_degree(G.basis, max_degree), 1, max_degree);
  return run_axiom(suite.empty() ? G.name : suite, "unit(" + std::string(op) + ")", max_degree, tuples.size(),
                   [&](std::size_t i) {
                     const B& x = tuples[i][0];
                     if (auto w = compare(tuple_text(tuples[i]), m(G.unit, x), LinComb<B>(x))) return w;
                     return compare(tuple_text(tuples[i]), m(x, G.unit), LinComb<B>(x));
                   },
                   policy);
}

template <class B>
AxiomResult check_commutative(const GradedStructure<B>& G, std::string_view op, int max_degree,
                              const ExecPolicy& policy, std::string suite = "") {
  const auto& m = G.product(op);
  auto tuples = basis_tuples(basis_by_degree(G.basis, max_degree), 2, max_degree);
  return run_axiom(suite.empty() ? G.name : suite, "commutative(" + std::string(op) + ")", max_degree,
                   tuples.size(),
                   [&](std::size_t i) {
                     const auto& t = tuples[i];
                     return compare(tuple_text(t), m(t[0], t[1]), m(t[1], t[0]));
                   },
                   policy);
}

template <class B>
LinComb<Tensor3<B>> left_iterate(const Coproduct<B>& delta, const B& x) {
  LinComb<Tensor3<B>> out;
  for (const auto& [t, c] : delta(x))
    for (const auto& [u, cu] : delta(t.left)) out.add({u.left, u.right, t.right}, c * cu);
  return out;
}

template <class B>
LinComb<Tensor3<B>> right_iterate(const Coproduct<B>& delta, const B& x) {
  LinComb<Tensor3<B>> out;
  for (const auto& [t, c] : delta(x))
    for (const auto& [u, cu] : delta(t.right)) out.add({t.left, u.left, u.right}, c * cu);
  return out;
}

template <class B>
AxiomResult check_coassociative(const GradedStructure<B>& G, int max_degree, const ExecPolicy& policy,
                                std::string suite = "") {
  auto tuples = basis_tuples(basis_by_degree(G.basis, max_degree), 1, max_degree);
  return run_axiom(suite.empty() ? G.name : suite, "coassociative", max_degree, tuples.size(),
                   [&](std::size_t i) {
                     const B& x = tuples[i][0];
                     return compare(tuple_text(tuples[i]), left_iterate(G.coproduct, x),
                                    right_iterate(G.coproduct, x));
                   },
                   policy);
}

template <class B>
AxiomResult check_counit(const GradedStructure<B>& G, int max_degree, const ExecPolicy& policy,
                         std::string suite = "") {
  auto tuples = basis_tuples(basis_by_degree(G.basis, max_degree), 1, max_degree);
  return run_axiom(suite.empty() ? G.name : suite, "counit", max_degree, tuples.size(),
                   [&](std::size_t i) {
                     const B& x = tuples[i][0];
                     LinComb<B> left, right;
                     for (const auto& [t, c] : G.coproduct(x)) {
                       left.add(t.right, c * counit(G.unit, t.left));
                       right.add(t.left, c * counit(G.unit, t.right));
                     }
                     if (auto w = compare(tuple_text(tuples[i]), left, LinComb<B>(x))) return w;
                     return compare(tuple_text(tuples[i]), right, LinComb<B>(x));
                   },
                   policy);
}

template <class B>
AxiomResult check_cocommutative(const GradedStructure<B>& G, int max_degree, const ExecPolicy& policy,
                                std::string suite = "") {
  auto tuples = basis_tuples(basis_by_degree(G.basis, max_degree), 1, max_degree);
  return run_axiom(suite.empty() ? G.name : suite, "cocommutative", max_degree, tuples.size(),
                   [&](std::size_t i) {
                     auto d = G.coproduct(tuples[i][0]);
                     return compare(tuple_text(tuples[i]), swap_factors(d), d);
                   },
                   policy);
}

/// Δ(xy) = Δ(x)Δ(y) with the componentwise product on the tensor square.
template <class B>
AxiomResult check_hopf_compat(const GradedStructure<B>& G, std::string_view op, int max_degree,
                              const ExecPolicy& policy, std::string suite = "") {
  const auto& m = G.product(op);
  auto tuples = basis_tuples(basis_by_degree(G.basis, max_degree), 2, max_degree);
  return run_axiom(suite.empty() ? G.name : suite, "hopf_compat(" + std::string(op) + ")", max_degree,
                   tuples.size(),
                   [&](std::size_t i) {
                     const auto& t = tuples[i];
                     auto lhs = coproduct_of(G.coproduct, m(t[0], t[1]));
                     auto rhs = tensor_product(m, G.coproduct(t[0]), G.coproduct(t[1]));
                     return compare(tuple_text(t), lhs, rhs);
                   },
                   policy);
}

/// Δ(xy) = Δ(x)(1⊗y) + (x⊗1)Δ(y) - x⊗y.
template <class B>
AxiomResult check_uiP(const GradedStructure<B>& G, std::string_view op, int max_degree, const ExecPolicy& policy,
                      std::string suite = "") {
  const auto& m = G.product(op);
  auto tuples = basis_tuples(basis_by_degree(G.basis, max_degree), 2, max_degree);
  return run_axiom(suite.empty() ? G.name : suite, "unital_infinitesimal(" + std::string(op) + ")", max_degree,
                   tuples.size(),
                   [&](std::size_t i) {
                     const auto& t = tuples[i];
                     auto lhs = coproduct_of(G.coproduct, m(t[0], t[1]));
                     TensorComb<B, B> rhs;
                     for (const auto& [u, c] : G.coproduct(t[0]))
                       for (const auto& [r, cr] : m(u.right, t[1])) rhs.add({u.left, r, std::nullopt}, c * cr);
                     for (const auto& [u, c] : G.coproduct(t[1]))
                       for (const auto& [l, cl] : m(t[0], u.left)) rhs.add({l, u.right, std::nullopt}, c * cl);
                     rhs.add({t[0], t[1], std::nullopt}, -1);
                     return compare(tuple_text(t), lhs, rhs);
                   },
                   policy);
}

/// (hat, Δ) Hopf-compatible and (bar, Δ) unital infinitesimal.
template <class B>
AxiomResult check_2as(const GradedStructure<B>& G, std::string_view hat_op, std::string_view bar_op,
                      int max_degree, const ExecPolicy& policy, std::string suite = "") {
  AxiomResult h = check_hopf_compat(G, hat_op, max_degree, policy, suite);
  AxiomResult u = check_uiP(G, bar_op, max_degree, policy, suite);
  AxiomResult out = h.pass ? u : h;
  out.axiom = "2-associative(" + std::string(hat_op) + "," + std::string(bar_op) + ")";
  return out;
}

/// Twisted-level Δ(m(a,b)) = Δ(a)Δ(b) on the twisted tensor square.
template <class B>
AxiomResult check_twisted_hopf_compat(const TwistedStructure<B>& T, std::string_view op, int max_degree,
                                      const ExecPolicy& policy, std::string suite = "") {
  const auto& m = T.product(op);
  auto tuples = basis_tuples(basis_by_degree(T.basis, max_degree), 2, max_degree);
  return run_axiom(suite.empty() ? T.name : suite, "twisted_hopf_compat(" + std::string(op) + ")", max_degree,
                   tuples.size(),
                   [&](std::size_t i) {
                     const auto& t = tuples[i];
                     auto lhs = coproduct_of(T.coproduct, m(t[0], t[1]));
                     auto rhs = twisted_tensor_product(T, m, T.coproduct(t[0]), T.coproduct(t[1]));
                     return compare(tuple_text(t), lhs, rhs);
                   },
                   policy);
}

// ---------------------------------------------------------------------------
// Transposition.

/// The product ^tΔ: (a, b) ↦ Σ_t ⟨Δ(t), a⊗b⟩ t over the canonical bases.
/// Tables are built for degrees ≤ max_degree.
template <class B>
Product<B> transpose_coproduct(const std::function<std::vector<B>(int)>& basis,
                               const std::function<int(const B&)>& degree, const Coproduct<B>& delta,
                               int max_degree) {
  auto table = std::make_shared<std::map<std::pair<B, B>, LinComb<B>>>();
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& t : basis(d))
      for (const auto& [u, c] : delta(t)) (*table)[{u.left, u.right}].add(t, c);
  return [table, degree, max_degree](const B& a, const B& b) {
    if (degree(a) + degree(b) > max_degree) throw Error(ErrorKind::OutOfRange, "transpose table too small");
    auto it = table->find({a, b});
    return it == table->end() ? LinComb<B>() : it->second;
  };
}

/// The coproduct ^tm: t ↦ Σ_{a,b} ⟨m(a,b), t⟩ a⊗b.
template <class B>
Coproduct<B> transpose_product(const std::function<std::vector<B>(int)>& basis,
                               const std::function<int(const B&)>& degree, const Product<B>& m, int max_degree) {
  auto table = std::make_shared<std::map<B, TensorComb<B, B>>>();
  auto by_degree = basis_by_degree(basis, max_degree);
  for (const auto& pair : basis_tuples(by_degree, 2, max_degree))
    for (const auto& [t, c] : m(pair[0], pair[1])) (*table)[t].add({pair[0], pair[1], std::nullopt}, c);
  return [table, degree, max_degree](const B& t) {
    if (degree(t) > max_degree) throw Error(ErrorKind::OutOfRange, "transpose table too small");
    auto it = table->find(t);
    return it == table->end() ? TensorComb<B, B>() : it->second;
  };
}

/// Graded dual: products ^tΔ for each given coproduct, coproduct ^tm.
template <class B>
GradedStructure<B> dual_structure(const GradedStructure<B>& G, const std::vector<NamedProduct<B>>& extra_products,
                                  const std::vector<std::pair<std::string, Coproduct<B>>>& coproducts,
                                  std::string_view op, int max_degree) {
  GradedStructure<B> D;
  D.name = G.name + "^*";
  D.basis = G.basis;
  D.degree = G.degree;
  D.unit = G.unit;
  for (const auto& [n, delta] : coproducts)
    D.products.push_back({"t" + n, transpose_coproduct(G.basis, G.degree, delta, max_degree)});
  for (const auto& p : extra_products) D.products.push_back(p);
  D.coproduct = transpose_product(G.basis, G.degree, G.product(op), max_degree);
  return D;
}

/// ⟨m(a,b), t⟩ = ⟨a⊗b, Δ(t)⟩ for all basis pairs of total degree ≤ max_degree.
template <class B>
AxiomResult check_transpose(std::string suite, std::string axiom, const std::function<std::vector<B>(int)>& basis,
                            const std::function<int(const B&)>& degree, const Product<B>& m,
                            const Coproduct<B>& delta, int max_degree, const ExecPolicy& policy) {
  auto dual = transpose_coproduct(basis, degree, delta, max_degree);
  auto tuples = basis_tuples(basis_by_degree(basis, max_degree), 2, max_degree);
  return run_axiom(std::move(suite), std::move(axiom), max_degree, tuples.size(),
                   [&](std::size_t i) {
                     const auto& t = tuples[i];
                     return compare(tuple_text(t), m(t[0], t[1]), dual(t[0], t[1]));
                   },
                   policy);
}

/// Twisted transposition: the coefficient of t in m(a,b)·ξ_{S,T} equals the
/// coefficient of a⊗b⊗(S,T) in Δ(t).
template <class B>
AxiomResult check_twisted_transpose(std::string suite, std::string axiom, const TwistedStructure<B>& T,
                                    std::string_view op, int max_degree, const ExecPolicy& policy) {
  const auto& m = T.product(op);
  auto tuples = basis_tuples(basis_by_degree(T.basis, max_degree), 2, max_degree);
  return run_axiom(std::move(suite), std::move(axiom), max_degree, tuples.size(),
                   [&](std::size_t i) {
                     const auto& t = tuples[i];
                     const int p = T.degree(t[0]), q = T.degree(t[1]);
                     const LinComb<B> value = m(t[0], t[1]);
                     for (const auto& sh : shuffles(p, q)) {
                       Permutation g = shuffle_to_perm(sh);
                       LinComb<B> lhs;
                       for (const auto& [b, c] : value) lhs.add(T.act(b, g), c);
                       LinComb<B> rhs;
                       TensorBasis<B, B> key{t[0], t[1], ShuffleTag{sh.blocks[0], sh.blocks[1]}};
                       for (const auto& r : T.basis(p + q)) rhs.add(r, T.coproduct(r).coeff(key));
                       if (auto w = compare(tuple_text(t) + " ; " + to_text(key.tag.value()), lhs, rhs)) return w;
                     }
                     return std::optional<Witness>();
                   },
                   policy);
}

// ---------------------------------------------------------------------------
// Primitives and freeness.

/// dim ker(Δ - 1⊗x - x⊗1) in degrees 1..max_degree.
template <class B>
IntSeries primitive_dims(const GradedStructure<B>& G, int max_degree) {
  IntSeries out;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<TensorComb<B, B>> rows;
    const auto basis = G.basis(d);
    for (const auto& x : basis) {
      TensorComb<B, B> r = G.coproduct(x);
      r.add({G.unit, x, std::nullopt}, -1);
      r.add({x, G.unit, std::nullopt}, -1);
      rows.push_back(std::move(r));
    }
    out.dims.push_back(static_cast<std::int64_t>(
        kernel_dimension(std::span<const TensorComb<B, B>>(rows), basis.size())));
  }
  return out;
}

template <class B>
IntSeries dimension_series(const std::function<std::vector<B>(int)>& basis, int max_degree) {
  IntSeries out;
  for (int d = 1; d <= max_degree; ++d) out.dims.push_back(static_cast<std::int64_t>(basis(d).size()));
  return out;
}

/// Passes iff prim = free_generator_series(dims).
AxiomResult freeness_report(std::string suite, const IntSeries& dims, const IntSeries& prim);

}  // namespace ohl
