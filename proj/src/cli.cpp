#include "ohl/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "ohl/catalog.hpp"
#include "ohl/suites.hpp"

namespace ohl::cli {

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

namespace {

using json = nlohmann::ordered_json;

template <class B>
std::string lincomb_output(const LinComb<B>& a, bool as_json) {
  if (!as_json) return to_text(a) + "\n";
  std::string s;
  for (const auto& [text, c] : canonical_terms(a))
    s += json{{"coeff", to_text(c)}, {"basis", text}}.dump() + "\n";
  return s;
}

/// Single basis results print bare; JSON still uses the term schema.
template <class B>
std::string element_output(const B& b, bool as_json) {
  if (!as_json) return to_text(b) + "\n";
  return lincomb_output(LinComb<B>(b), true);
}

std::string series_output(const IntSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.dims.size(); ++i) out += (i ? "," : "") + std::to_string(s.dims[i]);
  return out + "\n";
}

/// Type-erased view of one registered structure.
struct Entry {
  std::string description;
  std::function<std::string(const std::vector<std::string>&, bool)> mul;
  std::function<std::string(const std::string&, bool)> comul;
  std::function<IntSeries(int)> dims;
  std::function<IntSeries(int)> primitives;
  std::function<CheckReport(int, const ExecPolicy&)> verify;
};

enum class Compat { hopf, uip };

template <class B, class Parse>
Entry make_entry(std::string description, Parse parse, GradedStructure<B> G, std::string op, Compat compat,
                 std::optional<std::type_identity_t<TwistedStructure<B>>> twisted = std::nullopt,
                 std::optional<std::string> twisted_op = std::nullopt) {
  Entry e;
  e.description = std::move(description);
  auto lc = [parse](const std::string& s) { return parse_lincomb<B>(s, parse); };
  e.mul = [G, op, lc](const std::vector<std::string>& args, bool as_json) {
    if (args.empty()) throw Error(ErrorKind::ArityMismatch, "mul needs at least one element");
    LinComb<B> acc = lc(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) acc = product_of(G.product(op), acc, lc(args[i]));
    return lincomb_output(acc, as_json);
  };
  e.comul = [G, lc](const std::string& arg, bool as_json) {
    return lincomb_output(coproduct_of(G.coproduct, lc(arg)), as_json);
  };
  e.dims = [G](int max_degree) {
    IntSeries s;
    for (int d = 0; d <= max_degree; ++d) s.dims.push_back(static_cast<std::int64_t>(G.basis(d).size()));
    return s;
  };
  e.primitives = [G](int max_degree) {
    GradedStructure<B> H = G;
    H.coproduct = [G](const B& x) { return strip_tags(G.coproduct(x)); };
    return primitive_dims(H, max_degree);
  };
  e.verify = [G, op, compat, twisted, twisted_op](int max_degree, const ExecPolicy& policy) {
    CheckReport r;
    const std::string suite = G.name;
    r.add(check_associative(G, op, max_degree, policy, suite));
    r.add(check_unit(G, op, max_degree, policy, suite));
    r.add(check_coassociative(G, max_degree, policy, suite));
    r.add(check_counit(G, max_degree, policy, suite));
    if (twisted) {
      r.add(check_twisted_hopf_compat(*twisted, *twisted_op, max_degree, policy, suite));
    } else if (compat == Compat::uip) {
      r.add(check_uiP(G, op, max_degree, policy, suite));
    } else {
      r.add(check_hopf_compat(G, op, max_degree, policy, suite));
    }
    return r;
  };
  return e;
}

template <class B>
GradedStructure<B> as_graded(const TwistedStructure<B>& T) {
  GradedStructure<B> G;
  G.name = T.name;
  G.basis = T.basis;
  G.degree = T.degree;
  G.products = T.products;
  G.coproduct = T.coproduct;
  G.unit = T.unit;
  return G;
}

GradedStructure<Permutation> perm_structure(std::string name, Product<Permutation> m, Coproduct<Permutation> delta) {
  GradedStructure<Permutation> G;
  G.name = std::move(name);
  G.basis = all_permutations;
  G.degree = [](const Permutation& s) { return s.size(); };
  G.products = {{"m", std::move(m)}};
  G.coproduct = std::move(delta);
  G.unit = Permutation{};
  return G;
}

template <class B>
GradedStructure<B> renamed(GradedStructure<B> G, std::string name) {
  G.name = std::move(name);
  return G;
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> reg = [] {
    std::map<std::string, Entry> r;
    auto perm = [](std::string_view s) { return parse_permutation(s); };
    auto sc = [](std::string_view s) { return parse_set_composition(s); };
    auto tree = [](std::string_view s) { return parse_tree(s); };
    auto word = [](std::string_view s) { return parse_word(s); };
    auto mono = [](std::string_view s) { return parse_com_monomial(s); };
    Product<Permutation> mr_hat = [](const Permutation& a, const Permutation& b) { return mr_product(a, b); };
    Product<Permutation> mr_bar = [](const Permutation& a, const Permutation& b) { return concat_product(a, b); };

    r["mr-hat"] = make_entry("permutations, shuffle product, barΔ", perm,
                             perm_structure("mr-hat", mr_hat, mr_bar_coproduct), "m", Compat::hopf);
    r["mr-bar"] = make_entry("permutations, concatenation, barΔ", perm,
                             perm_structure("mr-bar", mr_bar, mr_bar_coproduct), "m", Compat::uip);
    r["mr-hatco"] = make_entry("permutations, concatenation, hatΔ", perm,
                               perm_structure("mr-hatco", mr_bar, mr_hat_coproduct), "m", Compat::hopf);
    const auto as = as_structure();
    r["mr-barco"] = make_entry("permutations, concatenation, tagged Δ", perm, renamed(as_graded(as), "mr-barco"),
                               "concat", Compat::hopf, as, std::string("concat"));

    const auto comp = comp_structure();
    r["ncqsym"] = make_entry("set compositions, bar wf, hatΔ", sc,
                             renamed(symmetrize(comp, {{Sym::bar, "wf"}}, Sym::hat), "ncqsym"), "bar wf", Compat::hopf);
    r["chapoton-g"] = make_entry("set compositions, bar wg, hatΔ", sc,
                                 renamed(symmetrize(comp, {{Sym::bar, "wg"}}, Sym::hat), "chapoton-g"), "bar wg", Compat::hopf);
    r["ctd"] = make_entry("set compositions, hat wf, barΔ", sc,
                          renamed(symmetrize(comp, {{Sym::hat, "wf"}}, Sym::bar), "ctd"), "hat wf", Compat::hopf);
    r["pi"] = make_entry("set compositions, hat wg, barΔ", sc,
                         renamed(symmetrize(comp, {{Sym::hat, "wg"}}, Sym::bar), "pi"), "hat wg", Compat::hopf);
    const auto ps = ps_structure();
    r["ps-twisted"] = make_entry("set compositions, concatenation, tagged δ", sc,
                                 renamed(as_graded(ps), "ps-twisted"), "concat", Compat::hopf, ps, std::string("concat"));
    const auto zin = zin_structure();
    r["zin"] = make_entry("permutations as degree-0 faces, m_Z, tagged Δ_Z", perm, renamed(as_graded(zin), "zin"),
                          "mz", Compat::hopf, zin, std::string("mz"));
    r["td"] = make_entry("planar trees, star, Δ_T", tree, renamed(td_structure(false), "td"), "star", Compat::hopf);
    r["dend"] = make_entry("binary trees, *_Y, Δ_Y", tree, renamed(dend_structure(), "dend"), "dend", Compat::hopf);
    r["words"] = make_entry("words over {a,b}, shuffle, deconcatenation", word,
                            renamed(words_structure(2, false), "words"), "shuffle", Compat::hopf);
    r["com"] = make_entry("X^n, hat mul, bar coproduct", mono,
                          renamed(symmetrize(com_structure(), {{Sym::hat, "mul"}}, Sym::bar), "com"), "hat mul", Compat::hopf);
    return r;
  }();
  return reg;
}

const Entry& lookup(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::UnknownStructure, "unknown structure '" + name + "'");
  return it->second;
}

Generator parse_generator(const std::string& s) {
  if (s == "prec" || s == "<") return Generator::prec;
  if (s == "succ" || s == ">") return Generator::succ;
  if (s == "dot" || s == ".") return Generator::dot;
  throw Error(ErrorKind::ParseError, "generator must be prec, succ or dot, got '" + s + "'");
}

std::string compose_cmd(const std::string& operad, const std::vector<std::string>& args, std::optional<int> sector,
                        bool as_json) {
  if (operad == "as") {
    if (args.empty()) throw Error(ErrorKind::ArityMismatch, "compose needs σ followed by its inputs");
    Permutation s = parse_permutation(args[0]);
    std::vector<Permutation> parts;
    for (std::size_t i = 1; i < args.size(); ++i) parts.push_back(parse_permutation(args[i]));
    return element_output(as_compose(s, parts), as_json);
  }
  if (operad == "td" && sector) {
    if (args.size() != 2) throw Error(ErrorKind::ArityMismatch, "sector insertion needs x and y");
    return lincomb_output(sector_insert(parse_tree(args[0]), *sector, parse_tree(args[1])), as_json);
  }
  if (args.size() != 3) throw Error(ErrorKind::ArityMismatch, "compose needs a generator and two inputs");
  const Generator g = parse_generator(args[0]);
  if (operad == "ctd" || operad == "pi") {
    auto sc = [](std::string_view s) { return parse_set_composition(s); };
    auto x = parse_lincomb<SetComposition>(args[1], sc);
    auto y = parse_lincomb<SetComposition>(args[2], sc);
    auto f = [&](const SetComposition& a, const SetComposition& b) {
      return operad == "ctd" ? ctd_compose(g, a, b) : pi_compose(g, a, b);
    };
    return lincomb_output(bilinear_extend(f, x, y), as_json);
  }
  if (operad == "td") {
    auto tr = [](std::string_view s) { return parse_tree(s); };
    return lincomb_output(td_compose(g, parse_lincomb<PlanarTree>(args[1], tr), parse_lincomb<PlanarTree>(args[2], tr)),
                          as_json);
  }
  throw Error(ErrorKind::UnknownStructure, "unknown operad '" + operad + "'");
}

std::string map_cmd(const std::string& name, const std::string& arg, bool as_json) {
  try {
    if (name == "phi") return element_output(phi(parse_set_composition(arg)), as_json);
    if (name == "theta") return element_output(theta(parse_set_composition(arg)), as_json);
    if (name == "phi0") return element_output(phi0(parse_permutation(arg)), as_json);
    if (name == "alpha") return element_output(alpha(parse_permutation(arg)), as_json);
    if (name == "psi") return lincomb_output(psi(parse_tree(arg)), as_json);
    if (name == "psi0") return lincomb_output(psi0(parse_tree(arg)), as_json);
    if (name == "pi-td") return lincomb_output(dend_projection(parse_tree(arg)), as_json);
    if (name == "pi-ctd") return lincomb_output(pi_ctd(parse_set_composition(arg)), as_json);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotBinary || e.kind() == ErrorKind::NotDegreeZero)
      throw Error(ErrorKind::DomainMismatch, e.what());
    throw;
  }
  throw Error(ErrorKind::UnknownStructure, "unknown map '" + name + "'");
}

IntSeries family_dims(const std::string& family, int max_degree) {
  IntSeries s;
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t n = 0;
    if (family == "perms") {
      n = all_permutations(d).size();
    } else if (family == "setcomps") {
      n = all_set_compositions(d).size();
    } else if (family == "trees") {
      n = all_trees(d).size();
    } else if (family == "binary") {
      n = all_binary_trees(d).size();
    } else {
      throw Error(ErrorKind::UnknownStructure, "unknown family '" + family + "'");
    }
    s.dims.push_back(static_cast<std::int64_t>(n));
  }
  return s;
}

IntSeries parse_series(const std::string& text) {
  IntSeries s;
  for (const auto& piece : split_top_level(text, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      s.dims.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad series entry '" + piece + "'");
    }
  }
  return s;
}

}  // namespace

const std::vector<std::string>& structure_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in operadic Hopf algebras", "ohl"};
  app.require_subcommand(1);

  std::string structure, operad, name, family, suite = "all";
  std::optional<int> max_degree, degree, sector;
  int jobs = 1;
  bool as_json = false, unsafe = false;
  std::vector<std::string> elements;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "JSON-lines output");
    sub->add_option("--max-degree", max_degree, "Degree bound");
    sub->add_flag("--unsafe-degree", unsafe, "Allow degree bounds above 8");
  };
  auto* mul = app.add_subcommand("mul", "Product of elements");
  mul->add_option("--structure", structure)->required();
  mul->allow_extras();
  add_common(mul);
  auto* comul = app.add_subcommand("comul", "Coproduct of an element");
  comul->add_option("--structure", structure)->required();
  comul->allow_extras();
  add_common(comul);
  auto* compose = app.add_subcommand("compose", "Operadic composition");
  compose->add_option("--operad", operad)->required();
  compose->add_option("--sector", sector, "Sector for td insertion x o_i y");
  compose->allow_extras();
  add_common(compose);
  auto* map = app.add_subcommand("map", "Apply a named map");
  map->add_option("--name", name)->required();
  map->allow_extras();
  add_common(map);
  auto* dims = app.add_subcommand("dims", "Basis sizes per degree");
  dims->add_option("--family", family)->required();
  dims->add_option("--degree", degree, "Single degree");
  add_common(dims);
  auto* prims = app.add_subcommand("primitives", "Primitive dimensions per degree");
  prims->add_option("--structure", structure)->required();
  add_common(prims);
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite);
  verify->add_option("--structure", structure);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  add_common(verify);
  auto* series = app.add_subcommand("series", "Free generator series of a dimension series");
  series->add_option("--family", family);
  series->add_option("--structure", structure);
  series->allow_extras();
  add_common(series);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }
  // Positional elements come through as extras: CLI11 would split
  // bracketed values like [3,1,2] if they were a vector option.
  for (auto* sub : app.get_subcommands()) elements = sub->remaining();
  for (const auto& e : elements)
    if (e.size() > 2 && e.rfind("--", 0) == 0) {
      err << "ParseError: unknown option " << e << "\n";
      return usage;
    }

  ExecPolicy policy;
  policy.jobs = jobs;
  if (const char* seed = std::getenv("OHL_SEED")) {
    try {
      policy.seed = std::stoull(seed);
    } catch (const std::exception&) {
      err << "ParseError: OHL_SEED must be an unsigned integer\n";
      return usage;
    }
  }

  try {
    const bool is_verify = verify->parsed();
    const int bound = max_degree.value_or(is_verify ? 4 : 6);
    if (bound < 0) throw Error(ErrorKind::OutOfRange, "--max-degree must be non-negative");
    if (bound > 8 && !unsafe) throw Error(ErrorKind::OutOfRange, "--max-degree above 8 needs --unsafe-degree");

    if (mul->parsed()) {
      out << lookup(structure).mul(elements, as_json);
    } else if (comul->parsed()) {
      if (elements.size() != 1) throw Error(ErrorKind::ArityMismatch, "comul takes one element");
      out << lookup(structure).comul(elements[0], as_json);
    } else if (compose->parsed()) {
      out << compose_cmd(operad, elements, sector, as_json);
    } else if (map->parsed()) {
      if (elements.size() != 1) throw Error(ErrorKind::ArityMismatch, "map takes one element");
      out << map_cmd(name, elements[0], as_json);
    } else if (dims->parsed()) {
      IntSeries s = family_dims(family, degree ? *degree : bound);
      if (degree) s.dims = {s.dims.back()};
      if (as_json) {
        const int first = degree ? *degree : 0;
        for (std::size_t i = 0; i < s.dims.size(); ++i)
          out << json{{"degree", first + static_cast<int>(i)}, {"dim", s.dims[i]}}.dump() << "\n";
      } else {
        out << series_output(s);
      }
    } else if (prims->parsed()) {
      IntSeries s = lookup(structure).primitives(bound);
      if (as_json) {
        for (std::size_t i = 0; i < s.dims.size(); ++i)
          out << json{{"degree", static_cast<int>(i) + 1}, {"dim", s.dims[i]}}.dump() << "\n";
      } else {
        out << series_output(s);
      }
    } else if (series->parsed()) {
      IntSeries dimsv;
      if (!family.empty()) {
        IntSeries all = family_dims(family, bound);
        dimsv.dims.assign(all.dims.begin() + 1, all.dims.end());
      } else if (!structure.empty()) {
        IntSeries all = lookup(structure).dims(bound);
        dimsv.dims.assign(all.dims.begin() + 1, all.dims.end());
      } else if (elements.size() == 1) {
        dimsv = parse_series(elements[0]);
      } else {
        throw Error(ErrorKind::ArityMismatch, "series needs --family, --structure or one comma list");
      }
      IntSeries gens = free_generator_series(dimsv);
      if (as_json) {
        for (std::size_t i = 0; i < gens.dims.size(); ++i)
          out << json{{"degree", static_cast<int>(i) + 1}, {"dim", dimsv.dims[i]}, {"generators", gens.dims[i]}}.dump()
              << "\n";
      } else {
        out << series_output(gens);
      }
    } else if (is_verify) {
      CheckReport rep = structure.empty() ? run_suite(suite, bound, policy) : lookup(structure).verify(bound, policy);
      out << (as_json ? rep.json_lines() : rep.text());
      return rep.all_pass() ? ok : violation;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return usage;
  }
  return ok;
}

}  // namespace ohl::cli
