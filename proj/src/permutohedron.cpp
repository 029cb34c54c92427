#include "ohl/permutohedron.hpp"

#include <algorithm>
#include <cctype>

namespace ohl {

int SetComposition::size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

SetComposition make_set_composition(std::vector<std::vector<int>> blocks) {
  int n = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw Error(ErrorKind::InvalidValue, "empty block in set composition");
    std::sort(b.begin(), b.end());
    n += static_cast<int>(b.size());
  }
  std::vector<bool> seen(n + 1, false);
  for (const auto& b : blocks)
    for (int v : b) {
      if (v < 1 || v > n) throw Error(ErrorKind::OutOfRange, "label " + std::to_string(v) + " outside [n]");
      if (seen[v]) throw Error(ErrorKind::DuplicateEntry, "label " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
  return SetComposition{std::move(blocks)};
}

std::string to_text(const SetComposition& p) {
  if (p.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += '|';
    out += set_text(p.blocks[i]);
  }
  return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& body) {
  std::vector<int> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::ParseError, "bad label '" + item + "'");
    out.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

SetComposition parse_set_composition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<std::vector<int>> blocks;
  if (s == "{}" || s == "()" || s == "∅") return SetComposition{};
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (item.empty()) throw Error(ErrorKind::ParseError, "empty block in compact form");
      std::vector<int> block;
      for (char c : item) {
        if (c < '1' || c > '9') throw Error(ErrorKind::ParseError, "compact form takes digits 1-9");
        block.push_back(c - '0');
      }
      blocks.push_back(std::move(block));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t bar = s.find('|', pos);
      std::string item = s.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
      if (item.size() < 3 || item.front() != '{' || item.back() != '}')
        throw Error(ErrorKind::ParseError, "set composition block must look like {1,3}");
      blocks.push_back(parse_int_list(item.substr(1, item.size() - 2)));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
  }
  try {
    return make_set_composition(std::move(blocks));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

SetComposition sc_standardize(const SetComposition& p) {
  std::vector<int> labels;
  for (const auto& b : p.blocks) labels.insert(labels.end(), b.begin(), b.end());
  std::sort(labels.begin(), labels.end());
  SetComposition out = p;
  for (auto& b : out.blocks)
    for (int& v : b) v = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()) + 1;
  return out;
}

SetComposition sc_action(const SetComposition& p, const Permutation& s) {
  if (p.size() != s.size()) throw Error(ErrorKind::DegreeMismatch, "action by a permutation of the wrong size");
  Permutation inv = inverse(s);
  SetComposition out = p;
  for (auto& b : out.blocks) {
    for (int& v : b) v = inv(v);
    std::sort(b.begin(), b.end());
  }
  return out;
}

SetComposition sc_intersect(const SetComposition& p, std::span<const int> subset) {
  SetComposition out;
  for (const auto& b : p.blocks) {
    std::vector<int> kept;
    for (int v : b)
      if (std::find(subset.begin(), subset.end(), v) != subset.end()) kept.push_back(v);
    if (!kept.empty()) out.blocks.push_back(std::move(kept));
  }
  return out;
}

SetComposition sc_restrict(const SetComposition& p, std::span<const int> subset) {
  return sc_standardize(sc_intersect(p, subset));
}

SetComposition sc_shift(const SetComposition& p, int by) {
  SetComposition out = p;
  for (auto& b : out.blocks)
    for (int& v : b) v += by;
  return out;
}

SetComposition sc_concat(const SetComposition& p, const SetComposition& q) {
  SetComposition out = p;
  for (auto& b : sc_shift(q, p.size()).blocks) out.blocks.push_back(std::move(b));
  return out;
}

SetComposition sc_reverse(const SetComposition& p) {
  return SetComposition{{p.blocks.rbegin(), p.blocks.rend()}};
}

namespace {

void compositions_rec(const std::vector<int>& remaining, SetComposition& cur, std::vector<SetComposition>& out) {
  if (remaining.empty()) {
    out.push_back(cur);
    return;
  }
  const unsigned m = static_cast<unsigned>(remaining.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> block, rest;
    for (unsigned i = 0; i < m; ++i) ((mask >> i) & 1u ? block : rest).push_back(remaining[i]);
    cur.blocks.push_back(std::move(block));
    compositions_rec(rest, cur, out);
    cur.blocks.pop_back();
  }
}

}  // namespace

std::vector<SetComposition> all_set_compositions(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  std::vector<SetComposition> out;
  SetComposition cur;
  compositions_rec(labels, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::dot: return "dot";
    case Generator::prec: return "prec";
    case Generator::succ: return "succ";
  }
  return "?";
}

const std::vector<RuleBranch>& all_rule_branches() {
  static const std::vector<RuleBranch> branches = {
      RuleBranch::prec_right_unit, RuleBranch::prec_inductive, RuleBranch::dot_inductive,
      RuleBranch::succ_by_symmetry, RuleBranch::w_empty_empty, RuleBranch::w_dot_term,
      RuleBranch::w_prec_term, RuleBranch::w_succ_term};
  return branches;
}

const char* rule_branch_name(RuleBranch b) {
  switch (b) {
    case RuleBranch::none: return "none";
    case RuleBranch::prec_right_unit: return "prec_right_unit";
    case RuleBranch::prec_inductive: return "prec_inductive";
    case RuleBranch::dot_inductive: return "dot_inductive";
    case RuleBranch::succ_by_symmetry: return "succ_by_symmetry";
    case RuleBranch::w_empty_empty: return "w_empty_empty";
    case RuleBranch::w_dot_term: return "w_dot_term";
    case RuleBranch::w_prec_term: return "w_prec_term";
    case RuleBranch::w_succ_term: return "w_succ_term";
  }
  return "?";
}

namespace {

SetComposition tail(const SetComposition& p) {
  return SetComposition{{p.blocks.begin() + 1, p.blocks.end()}};
}

ScComb prepend(std::vector<int> head, const ScComb& rest) {
  ScComb out;
  for (const auto& [t, c] : rest) {
    SetComposition p;
    p.blocks.reserve(t.blocks.size() + 1);
    p.blocks.push_back(head);
    p.blocks.insert(p.blocks.end(), t.blocks.begin(), t.blocks.end());
    out.add(std::move(p), c);
  }
  return out;
}

ScComb prec_labeled(const SetComposition& a, const SetComposition& b, const CompositionRules& rules) {
  if (b.empty()) {
    if (a.empty() || rules.dropped == RuleBranch::prec_right_unit) return {};
    return ScComb(a);
  }
  if (a.empty() || rules.dropped == RuleBranch::prec_inductive) return {};
  return prepend(a.blocks.front(), w_labeled(tail(a), b, rules));
}

ScComb dot_labeled(const SetComposition& a, const SetComposition& b, const CompositionRules& rules) {
  if (a.empty() || b.empty() || rules.dropped == RuleBranch::dot_inductive) return {};
  std::vector<int> head = a.blocks.front();
  head.insert(head.end(), b.blocks.front().begin(), b.blocks.front().end());
  std::sort(head.begin(), head.end());
  return prepend(std::move(head), w_labeled(tail(a), tail(b), rules));
}

ScComb succ_labeled(const SetComposition& a, const SetComposition& b, const CompositionRules& rules) {
  if (rules.dropped == RuleBranch::succ_by_symmetry) return {};
  return prec_labeled(b, a, rules);
}

}  // namespace

ScComb compose_labeled(Generator g, const SetComposition& a, const SetComposition& b,
                       const CompositionRules& rules) {
  switch (g) {
    case Generator::dot: return dot_labeled(a, b, rules);
    case Generator::prec: return prec_labeled(a, b, rules);
    case Generator::succ: return succ_labeled(a, b, rules);
  }
  return {};
}

ScComb w_labeled(const SetComposition& a, const SetComposition& b, const CompositionRules& rules) {
  if (a.empty() && b.empty()) {
    if (rules.dropped == RuleBranch::w_empty_empty) return {};
    return ScComb(SetComposition{});
  }
  ScComb out;
  if (rules.kind == CompositionKind::ctd && rules.dropped != RuleBranch::w_dot_term)
    out += dot_labeled(a, b, rules);
  if (rules.dropped != RuleBranch::w_prec_term) out += prec_labeled(a, b, rules);
  if (rules.dropped != RuleBranch::w_succ_term) out += succ_labeled(a, b, rules);
  return out;
}

ScComb ctd_compose(Generator g, const SetComposition& p, const SetComposition& q, RuleBranch dropped) {
  return compose_labeled(g, p, sc_shift(q, p.size()), {CompositionKind::ctd, dropped});
}

ScComb pi_compose(Generator g, const SetComposition& p, const SetComposition& q, RuleBranch dropped) {
  return compose_labeled(g, p, sc_shift(q, p.size()), {CompositionKind::pi, dropped});
}

ScComb w_product(const SetComposition& p, const SetComposition& q, const CompositionRules& rules) {
  return w_labeled(p, sc_shift(q, p.size()), rules);
}

ScComb concat_sc_product(const SetComposition& p, const SetComposition& q) { return ScComb(sc_concat(p, q)); }

// ---------------------------------------------------------------------------

ScTensor sc_coproduct(const SetComposition& p) {
  ScTensor out;
  for (int l = 0; l <= p.num_blocks(); ++l) {
    SetComposition left{{p.blocks.begin(), p.blocks.begin() + l}};
    SetComposition right{{p.blocks.begin() + l, p.blocks.end()}};
    ShuffleTag tag;
    for (const auto& b : left.blocks) tag.first.insert(tag.first.end(), b.begin(), b.end());
    for (const auto& b : right.blocks) tag.second.insert(tag.second.end(), b.begin(), b.end());
    std::sort(tag.first.begin(), tag.first.end());
    std::sort(tag.second.begin(), tag.second.end());
    out.add({sc_standardize(left), sc_standardize(right), std::move(tag)}, 1);
  }
  return out;
}

ScTensor ps_coproduct(const SetComposition& p) {
  ScTensor out;
  for (auto& tag : subset_splits(p.size())) {
    SetComposition l = sc_restrict(p, tag.first);
    SetComposition r = sc_restrict(p, tag.second);
    out.add({std::move(l), std::move(r), std::move(tag)}, 1);
  }
  return out;
}

bool is_reduced(const SetComposition& p) {
  if (p.size() < 1) throw Error(ErrorKind::OutOfRange, "is_reduced needs n >= 1");
  int count = 0, running_max = 0;
  for (int l = 0; l + 1 < p.num_blocks(); ++l) {
    count += static_cast<int>(p.blocks[l].size());
    running_max = std::max(running_max, p.blocks[l].back());
    if (running_max == count) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Permutation sc0_to_perm(const SetComposition& p) {
  if (p.degree() != 0) throw Error(ErrorKind::NotDegreeZero, to_text(p) + " has degree " + std::to_string(p.degree()));
  Permutation s;
  for (const auto& b : p.blocks) s.word.push_back(b.front());
  return s;
}

SetComposition perm_to_sc0(const Permutation& s) {
  SetComposition p;
  for (int v : s.word) p.blocks.push_back({v});
  return p;
}

ScComb degree0_projection(const SetComposition& p) { return p.degree() == 0 ? ScComb(p) : ScComb(); }

PermComb pi_ctd(const SetComposition& p) { return p.degree() == 0 ? PermComb(sc0_to_perm(p)) : PermComb(); }

PermComb zin_product(const Permutation& s, const Permutation& t) {
  Permutation st = direct_sum(s, t);
  PermComb out;
  for (const auto& xi : shuffle_permutations(s.size(), t.size())) out.add(compose(st, xi), 1);
  return out;
}

PermComb zin_product(const SetComposition& p, const SetComposition& q) {
  return zin_product(sc0_to_perm(p), sc0_to_perm(q));
}

PermTensor zin_coproduct(const Permutation& s) {
  PermTensor out;
  for (const auto& [t, c] : sc_coproduct(perm_to_sc0(s)))
    out.add({sc0_to_perm(t.left), sc0_to_perm(t.right), t.tag}, c);
  return out;
}

PermTensor zin_coproduct(const SetComposition& p) { return zin_coproduct(sc0_to_perm(p)); }

Permutation zin_action(const Permutation& s, const Permutation& t) { return compose(inverse(t), s); }

}  // namespace ohl
