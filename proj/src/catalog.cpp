#include "ohl/catalog.hpp"

namespace ohl {

std::string to_text(const ComMonomial& x) { return "X^" + std::to_string(x.degree); }

ComMonomial parse_com_monomial(std::string_view text) {
  if (text == "1") return ComMonomial{0};
  if (text == "X") return ComMonomial{1};
  if (text.size() < 3 || text.substr(0, 2) != "X^")
    throw Error(ErrorKind::ParseError, "Com monomial must look like X^3");
  std::string digits(text.substr(2));
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::ParseError, "bad exponent in '" + std::string(text) + "'");
  return ComMonomial{std::stoi(digits)};
}

TwistedStructure<Permutation> as_structure() {
  TwistedStructure<Permutation> T;
  T.name = "as";
  T.basis = [](int n) { return all_permutations(n); };
  T.degree = [](const Permutation& s) { return s.size(); };
  T.act = [](const Permutation& s, const Permutation& g) { return compose(s, g); };
  T.products = {{"concat", [](const Permutation& a, const Permutation& b) { return concat_product(a, b); }}};
  T.coproduct = as_twisted_coproduct;
  T.unit = Permutation{};
  return T;
}

namespace {

TwistedStructure<SetComposition> comp_base() {
  TwistedStructure<SetComposition> T;
  T.basis = [](int n) { return all_set_compositions(n); };
  T.degree = [](const SetComposition& p) { return p.size(); };
  T.act = [](const SetComposition& p, const Permutation& g) { return sc_action(p, g); };
  T.unit = SetComposition{};
  return T;
}

}  // namespace

TwistedStructure<SetComposition> comp_structure(RuleBranch dropped) {
  TwistedStructure<SetComposition> T = comp_base();
  T.name = "comp";
  const CompositionRules ctd{CompositionKind::ctd, dropped};
  const CompositionRules pi{CompositionKind::pi, dropped};
  T.products = {
      {"wf", [ctd](const SetComposition& a, const SetComposition& b) { return w_product(a, b, ctd); }},
      {"wg", [pi](const SetComposition& a, const SetComposition& b) { return w_product(a, b, pi); }},
      {"dot", [dropped](const SetComposition& a, const SetComposition& b) { return ctd_compose(Generator::dot, a, b, dropped); }},
      {"prec", [dropped](const SetComposition& a, const SetComposition& b) { return ctd_compose(Generator::prec, a, b, dropped); }},
      {"succ", [dropped](const SetComposition& a, const SetComposition& b) { return ctd_compose(Generator::succ, a, b, dropped); }},
      {"concat", concat_sc_product},
  };
  T.coproduct = sc_coproduct;
  return T;
}

TwistedStructure<SetComposition> ps_structure() {
  TwistedStructure<SetComposition> T = comp_base();
  T.name = "ps";
  T.products = {
      {"concat", concat_sc_product},
      {"wf", [](const SetComposition& a, const SetComposition& b) { return w_product(a, b); }},
  };
  T.coproduct = ps_coproduct;
  return T;
}

TwistedStructure<Permutation> zin_structure() {
  TwistedStructure<Permutation> T;
  T.name = "zin";
  T.basis = [](int n) { return all_permutations(n); };
  T.degree = [](const Permutation& s) { return s.size(); };
  T.act = zin_action;
  T.products = {{"mz", [](const Permutation& a, const Permutation& b) { return zin_product(a, b); }}};
  T.coproduct = [](const Permutation& s) { return zin_coproduct(s); };
  T.unit = Permutation{};
  return T;
}

TwistedStructure<ComMonomial> com_structure() {
  TwistedStructure<ComMonomial> T;
  T.name = "com";
  T.basis = [](int n) { return std::vector<ComMonomial>{ComMonomial{n}}; };
  T.degree = [](const ComMonomial& x) { return x.degree; };
  T.act = [](const ComMonomial& x, const Permutation&) { return x; };
  T.products = {{"mul", [](const ComMonomial& a, const ComMonomial& b) {
                   ComTerm t = com_trivial_product(a.degree, b.degree);
                   return LinComb<ComMonomial>(ComMonomial{t.degree}, t.coeff);
                 }}};
  T.coproduct = [](const ComMonomial& x) {
    TensorComb<ComMonomial, ComMonomial> out;
    for (auto& tag : subset_splits(x.degree)) {
      ComMonomial l{static_cast<int>(tag.first.size())};
      ComMonomial r{static_cast<int>(tag.second.size())};
      out.add({l, r, std::move(tag)}, 1);
    }
    return out;
  };
  T.unit = ComMonomial{0};
  return T;
}

GradedStructure<PlanarTree> td_structure(bool bar) {
  GradedStructure<PlanarTree> G;
  G.name = bar ? "td/barΔ" : "td/Δ";
  G.basis = all_trees;
  G.degree = [](const PlanarTree& t) { return t.degree(); };
  G.products = {
      {"star", [](const PlanarTree& a, const PlanarTree& b) { return star(a, b); }},
      {"prec", [](const PlanarTree& a, const PlanarTree& b) { return td_compose(Generator::prec, a, b); }},
      {"succ", [](const PlanarTree& a, const PlanarTree& b) { return td_compose(Generator::succ, a, b); }},
      {"dot", [](const PlanarTree& a, const PlanarTree& b) { return td_compose(Generator::dot, a, b); }},
  };
  if (bar) {
    G.coproduct = tree_bar_coproduct;
  } else {
    G.coproduct = tree_coproduct;
  }
  G.unit = leaf();
  return G;
}

GradedStructure<PlanarTree> dend_structure() {
  GradedStructure<PlanarTree> G;
  G.name = "dend";
  G.basis = all_binary_trees;
  G.degree = [](const PlanarTree& t) { return t.degree(); };
  G.products = {{"dend", dend_product}};
  G.coproduct = dend_coproduct;
  G.unit = leaf();
  return G;
}

GradedStructure<Word> words_structure(int alphabet, bool unshuffle) {
  GradedStructure<Word> G;
  G.name = unshuffle ? "words/unshuffle" : "words/deconcat";
  G.basis = [alphabet](int n) { return all_words(n, alphabet); };
  G.degree = [](const Word& w) { return w.size(); };
  G.products = {{"shuffle", word_shuffle}, {"concat", word_concat}};
  if (unshuffle) {
    G.coproduct = word_unshuffle;
  } else {
    G.coproduct = word_deconcat;
  }
  G.unit = Word{};
  return G;
}

}  // namespace ohl
