#include "ohl/exact_linear.hpp"

namespace ohl {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotDegreeZero: return "NotDegreeZero";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::BadSector: return "BadSector";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorKind::NegativeGenerator: return "NegativeGenerator";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownStructure: return "UnknownStructure";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidValue: return "InvalidValue";
  }
  return "Error";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_text(const Rational& q) { return q.get_str(); }

std::string set_text(std::span<const int> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::size_t sparse_rank(std::vector<SparseRow> rows) {
  // Pivot rows indexed by their leading column; each incoming row is reduced
  // against the pivots until it is zero or has a fresh leading column.
  std::map<std::size_t, SparseRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto p = pivots.find(lead->first);
      if (p == pivots.end()) {
        Rational inv = 1 / lead->second;
        for (auto& [col, c] : row) c *= inv;
        pivots.emplace(lead->first, std::move(row));
        break;
      }
      Rational factor = lead->second;
      for (const auto& [col, c] : p->second) {
        auto [it, inserted] = row.try_emplace(col, -factor * c);
        if (!inserted) {
          it->second -= factor * c;
          if (sgn(it->second) == 0) row.erase(it);
        }
      }
    }
  }
  return pivots.size();
}

std::string to_text(const IntSeries& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.dims.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.dims[i]);
  }
  return out + ")";
}

IntSeries free_generator_series(const IntSeries& f) {
  const auto& fd = f.dims;
  IntSeries g;
  g.dims.resize(fd.size());
  for (std::size_t n = 0; n < fd.size(); ++n) {
    if (fd[n] < 0) throw Error(ErrorKind::InvalidValue, "negative dimension in series");
    // g_n = f_n - sum_{k=1}^{n-1} g_k f_{n-k}, 1-based.
    std::int64_t v = fd[n];
    for (std::size_t k = 0; k < n; ++k) v -= g.dims[k] * fd[n - k - 1];
    if (v < 0)
      throw Error(ErrorKind::NegativeGenerator,
                  "generator count " + std::to_string(v) + " in degree " + std::to_string(n + 1));
    g.dims[n] = v;
  }
  return g;
}

IntSeries series_from_generators(const IntSeries& g) {
  IntSeries f;
  f.dims.resize(g.dims.size());
  for (std::size_t n = 0; n < g.dims.size(); ++n) {
    std::int64_t v = g.dims[n];
    for (std::size_t k = 0; k < n; ++k) v += g.dims[k] * f.dims[n - k - 1];
    f.dims[n] = v;
  }
  return f;
}

}  // namespace ohl
