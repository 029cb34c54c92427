#pragma once

// Exact rational coefficients, sparse linear combinations over arbitrary
// basis families, tensor bases and small exact linear algebra.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ohl/error.hpp"

namespace ohl {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_text(const Rational& q);

/// A finite formal sum of basis objects with nonzero rational coefficients.
///
/// Terms live in a std::map keyed by the basis type's own total order, so
/// two combinations are equal iff their term maps are equal. Printing
/// re-sorts by the textual encoding of the basis objects.
template <class B>
class LinComb {
 public:
  using Basis = B;
  using Terms = std::map<B, Rational>;

  LinComb() = default;
  explicit LinComb(B b, Rational c = 1) { add(std::move(b), c); }

  void add(const B& b, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (inserted) {
      // Rational(p, q) built by hand may not be in lowest terms.
      it->second.canonicalize();
    } else {
      it->second += c;
      it->second.canonicalize();
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  void add(B&& b, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(std::move(b), c).first->second.canonicalize();
    } else {
      it->second += c;
      it->second.canonicalize();
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) {
        c *= s;
        c.canonicalize();
      }
    }
    return *this;
  }
  void add_scaled(const LinComb& o, const Rational& s) {
    if (sgn(s) == 0) return;
    for (const auto& [b, c] : o.terms_) add(b, c * s);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.terms_ == b.terms_;
  }

  /// Linear extension of a basis-level map B -> LinComb<C>.
  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const B&>()))>;
    Out out;
    for (const auto& [b, c] : terms_) out.add_scaled(f(b), c);
    return out;
  }

 private:
  Terms terms_;
};

template <class B>
LinComb<B> lc_add(const LinComb<B>& a, const LinComb<B>& b) {
  return a + b;
}

/// Σ coeff_a(x)·coeff_b(y)·f(x, y).
template <class F, class B1, class B2>
auto bilinear_extend(F&& f, const LinComb<B1>& a, const LinComb<B2>& b) {
  using Out = std::decay_t<decltype(f(std::declval<const B1&>(),
                                      std::declval<const B2&>()))>;
  Out out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(f(x, y), cx * cy);
  return out;
}

/// The (S, T) tag of a term of a twisted coproduct: an ordered partition of
/// [p+q] into two sorted sets.
struct ShuffleTag {
  std::vector<int> first;
  std::vector<int> second;
  auto operator<=>(const ShuffleTag&) const = default;
};

template <class L, class R>
struct TensorBasis {
  L left;
  R right;
  std::optional<ShuffleTag> tag;

  auto operator<=>(const TensorBasis&) const = default;
};

template <class B>
struct Tensor3 {
  B first;
  B second;
  B third;
  auto operator<=>(const Tensor3&) const = default;
};

template <class L, class R>
using TensorComb = LinComb<TensorBasis<L, R>>;

template <class L, class R>
TensorComb<L, R> lc_tensor(const LinComb<L>& a, const LinComb<R>& b) {
  TensorComb<L, R> out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add(TensorBasis<L, R>{x, y, std::nullopt}, cx * cy);
  return out;
}

template <class L, class R>
TensorComb<L, R> simple_tensor(const L& a, const R& b, Rational c = 1) {
  return TensorComb<L, R>(TensorBasis<L, R>{a, b, std::nullopt}, c);
}

std::string set_text(std::span<const int> s);

inline std::string to_text(const ShuffleTag& t) {
  return "(" + set_text(t.first) + "," + set_text(t.second) + ")";
}

template <class L, class R>
std::string to_text(const TensorBasis<L, R>& t) {
  std::string s = to_text(t.left) + " ⊗ " + to_text(t.right);
  if (t.tag) s += " ⊗ " + to_text(*t.tag);
  return s;
}

template <class B>
std::string to_text(const Tensor3<B>& t) {
  return to_text(t.first) + " ⊗ " + to_text(t.second) + " ⊗ " + to_text(t.third);
}

/// Terms of `a` as (text, coefficient) pairs sorted by text.
template <class B>
std::vector<std::pair<std::string, Rational>> canonical_terms(const LinComb<B>& a) {
  std::vector<std::pair<std::string, Rational>> out;
  out.reserve(a.size());
  for (const auto& [b, c] : a) out.emplace_back(to_text(b), c);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

/// `c1*B1 + c2*B2 + -1*B3`, terms in canonical order; `0` when empty.
template <class B>
std::string to_text(const LinComb<B>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [text, c] : canonical_terms(a)) {
    if (!s.empty()) s += " + ";
    s += to_text(c) + "*" + text;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Exact linear algebra.

using SparseRow = std::map<std::size_t, Rational>;

/// Rank of a list of sparse rows by exact Gaussian elimination.
std::size_t sparse_rank(std::vector<SparseRow> rows);

/// Rank of the span of the given combinations.
template <class B>
std::size_t rank(std::span<const LinComb<B>> vectors) {
  std::map<B, std::size_t> index;
  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    SparseRow row;
    for (const auto& [b, c] : v) {
      auto [it, _] = index.try_emplace(b, index.size());
      row.emplace(it->second, c);
    }
    rows.push_back(std::move(row));
  }
  return sparse_rank(std::move(rows));
}

/// Dimension of the kernel of the linear map on a `basis_size`-dimensional
/// space whose matrix rows are the given combinations.
template <class B>
std::size_t kernel_dimension(std::span<const LinComb<B>> rows, std::size_t basis_size) {
  return basis_size - rank(rows);
}

// ---------------------------------------------------------------------------
// Generating series of graded dimensions.

/// f_1..f_N of a graded space with f_0 = 1.
struct IntSeries {
  std::vector<std::int64_t> dims;
  bool operator==(const IntSeries&) const = default;
};

std::string to_text(const IntSeries& s);

/// Generator counts g of a free associative algebra with Hilbert series f,
/// i.e. f = 1/(1 - g). Throws Error(ErrorKind::NegativeGenerator) when some
/// g_n < 0.
IntSeries free_generator_series(const IntSeries& f);

/// Inverse of free_generator_series: f = 1/(1 - g).
IntSeries series_from_generators(const IntSeries& g);

}  // namespace ohl
