#pragma once

// Batch command-line front end.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ohl/exact_linear.hpp"

namespace ohl::cli {

enum ExitCode : int { ok = 0, violation = 1, usage = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Registered structure names, in registry order.
const std::vector<std::string>& structure_names();

/// Parses `2*[1,2] + -1/3*[2,1]` style input; `parse_basis` reads one term.
/// A lone "0" is the zero combination.
template <class B, class Parse>
LinComb<B> parse_lincomb(std::string_view text, Parse&& parse_basis);

std::vector<std::string> split_top_level(std::string_view text, char sep);

template <class B, class Parse>
LinComb<B> parse_lincomb(std::string_view text, Parse&& parse_basis) {
  LinComb<B> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  const std::string_view whole = trim(text);
  if (whole == "0") return out;
  if (whole.empty()) throw Error(ErrorKind::ParseError, "empty linear combination");
  for (const auto& piece : split_top_level(whole, '+')) {
    std::string_view term = trim(piece);
    auto parts = split_top_level(term, '*');
    if (parts.size() == 1) {
      out.add(parse_basis(term), 1);
    } else if (parts.size() == 2) {
      out.add(parse_basis(trim(parts[1])), parse_rational(trim(parts[0])));
    } else {
      throw Error(ErrorKind::ParseError, "bad term '" + std::string(term) + "'");
    }
  }
  return out;
}

}  // namespace ohl::cli
