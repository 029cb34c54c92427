#include "ohl/suites.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ohl {

namespace {

template <class B>
std::vector<std::vector<B>> positive_tuples(const std::function<std::vector<B>(int)>& basis, int k, int max_degree,
                                            const std::function<int(const B&)>& degree) {
  std::vector<std::vector<B>> out;
  for (auto& t : basis_tuples(basis_by_degree(basis, max_degree), k, max_degree))
    if (std::all_of(t.begin(), t.end(), [&](const B& b) { return degree(b) > 0; })) out.push_back(std::move(t));
  return out;
}

template <class B>
using Relation = std::function<std::pair<LinComb<B>, LinComb<B>>(const B&, const B&, const B&)>;

template <class B>
AxiomResult check_relation(const std::string& suite, const std::string& name,
                           const std::vector<std::vector<B>>& triples, const Relation<B>& rel, int max_degree,
                           const ExecPolicy& policy) {
  return run_axiom(suite, name, max_degree, triples.size(),
                   [&](std::size_t i) {
                     const auto& t = triples[i];
                     auto [lhs, rhs] = rel(t[0], t[1], t[2]);
                     return compare(tuple_text(t), lhs, rhs);
                   },
                   policy);
}

AxiomResult simple_result(std::string suite, std::string axiom, int max_degree, bool pass, std::string note,
                          std::optional<Witness> witness = std::nullopt) {
  AxiomResult r;
  r.suite = std::move(suite);
  r.axiom = std::move(axiom);
  r.max_degree = max_degree;
  r.pass = pass;
  r.note = std::move(note);
  r.witness = std::move(witness);
  return r;
}

std::function<int(const Permutation&)> perm_degree = [](const Permutation& s) { return s.size(); };
std::function<int(const SetComposition&)> sc_size = [](const SetComposition& p) { return p.size(); };
std::function<int(const PlanarTree&)> tree_degree = [](const PlanarTree& t) { return t.degree(); };

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"symmetric", "mr",   "permutohedron", "duality",
                                                 "associahedron", "maps", "sectors",  "freeness"};
  return names;
}

CheckReport run_suite(std::string_view name, int max_degree, const ExecPolicy& policy) {
  if (name == "all") {
    CheckReport all;
    for (const auto& n : suite_names()) all.append(run_suite(n, max_degree, policy));
    return all;
  }
  if (name == "symmetric") return symmetric_suite(max_degree, policy);
  if (name == "mr") return mr_suite(max_degree, policy);
  if (name == "permutohedron") return permutohedron_suite(max_degree, policy);
  if (name == "duality") return duality_suite(max_degree, policy);
  if (name == "associahedron") return associahedron_suite(max_degree, policy);
  if (name == "maps") return maps_suite(max_degree, policy);
  if (name == "sectors") return sectors_suite(max_degree, policy);
  if (name == "freeness") return freeness_suite(max_degree, policy);
  throw Error(ErrorKind::UnknownStructure, "unknown suite '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

CheckReport symmetric_suite(int max_degree, const ExecPolicy& policy) {
  const std::string suite = "symmetric";
  CheckReport rep;
  const int nmax = max_degree + 2;

  {
    std::vector<std::pair<Permutation, int>> tasks;
    for (int n = 0; n <= nmax; ++n)
      for (const auto& s : all_permutations(n))
        for (int p = 0; p <= n; ++p) tasks.emplace_back(s, p);
    rep.add(run_axiom(suite, "coset_factorize_roundtrip", nmax, tasks.size(),
                      [&](std::size_t i) {
                        const auto& [s, p] = tasks[i];
                        CosetFactors f = coset_factorize(s, p);
                        Permutation back = compose(direct_sum(f.first, f.second), shuffle_to_perm(f.shuffle));
                        return compare(to_text(s) + " p=" + std::to_string(p), PermComb(back), PermComb(s));
                      },
                      policy));
  }
  {
    std::vector<std::array<int, 3>> tasks;
    for (int p = 0; p <= nmax; ++p)
      for (int q = 0; p + q <= nmax; ++q)
        for (int r = 0; p + q + r <= nmax; ++r) tasks.push_back({p, q, r});
    rep.add(run_axiom(suite, "shuffle_factorization", nmax, tasks.size(),
                      [&](std::size_t i) {
                        auto [p, q, r] = tasks[i];
                        PermComb direct, factored;
                        const int sizes[] = {p, q, r};
                        for (const auto& sh : shuffles(std::span<const int>(sizes))) direct.add(shuffle_to_perm(sh), 1);
                        for (const auto& xi : shuffle_permutations(p, q))
                          for (const auto& eta : shuffle_permutations(p + q, r))
                            factored.add(compose(direct_sum(xi, identity_permutation(r)), eta), 1);
                        return compare("(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")",
                                       direct, factored);
                      },
                      policy));
  }
  {
    // μ(μ(σ;τ);ρ) = μ(σ; μ(τ_i; ρ_i)), sizes of σ, τ's and ρ's summing to ≤ nmax+1.
    struct Task {
      Permutation s;
      std::vector<Permutation> taus, rhos;
    };
    std::vector<Task> tasks;
    const int budget = max_degree + 1;
    auto perms_of_size_list = [](const std::vector<int>& sizes) {
      std::vector<std::vector<Permutation>> out{{}};
      for (int k : sizes) {
        std::vector<std::vector<Permutation>> next;
        for (const auto& prefix : out)
          for (const auto& p : all_permutations(k)) {
            auto v = prefix;
            v.push_back(p);
            next.push_back(std::move(v));
          }
        out = std::move(next);
      }
      return out;
    };
    // Compositions of at most `budget` into exactly `parts` positive parts.
    std::function<void(int, int, std::vector<int>&, std::vector<std::vector<int>>&)> compositions =
        [&](int parts, int room, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
          if (static_cast<int>(cur.size()) == parts) {
            out.push_back(cur);
            return;
          }
          for (int a = 1; a <= room - (parts - static_cast<int>(cur.size()) - 1); ++a) {
            cur.push_back(a);
            compositions(parts, room - a, cur, out);
            cur.pop_back();
          }
        };
    for (int k = 1; k <= budget; ++k) {
      std::vector<std::vector<int>> as;
      std::vector<int> cur;
      compositions(k, budget, cur, as);
      for (const auto& a : as) {
        int total_a = 0;
        for (int x : a) total_a += x;
        std::vector<std::vector<int>> bs;
        compositions(total_a, budget, cur, bs);
        for (const auto& b : bs)
          for (const auto& s : all_permutations(k))
            for (const auto& taus : perms_of_size_list(a))
              for (const auto& rhos : perms_of_size_list(b)) tasks.push_back({s, taus, rhos});
      }
    }
    rep.add(run_axiom(suite, "as_compose_associative", budget, tasks.size(),
                      [&](std::size_t i) {
                        const auto& t = tasks[i];
                        Permutation lhs = as_compose(as_compose(t.s, t.taus), t.rhos);
                        std::vector<Permutation> inner;
                        std::size_t pos = 0;
                        for (const auto& tau : t.taus) {
                          std::vector<Permutation> part(t.rhos.begin() + static_cast<long>(pos),
                                                        t.rhos.begin() + static_cast<long>(pos) + tau.size());
                          pos += static_cast<std::size_t>(tau.size());
                          inner.push_back(as_compose(tau, part));
                        }
                        Permutation rhs = as_compose(t.s, inner);
                        std::string tuple = to_text(t.s);
                        for (const auto& x : t.taus) tuple += " " + to_text(x);
                        tuple += " ;";
                        for (const auto& x : t.rhos) tuple += " " + to_text(x);
                        return compare(tuple, PermComb(lhs), PermComb(rhs));
                      },
                      policy));
  }
  {
    // (t·σ)·τ = t·(στ) on tagged tensors of permutations.
    struct Task {
      TensorBasis<Permutation, Permutation> t;
      int n;
    };
    std::vector<Task> tasks;
    for (int n = 0; n <= max_degree; ++n)
      for (const auto& tag : subset_splits(n))
        for (const auto& l : all_permutations(static_cast<int>(tag.first.size())))
          for (const auto& r : all_permutations(static_cast<int>(tag.second.size())))
            tasks.push_back({{l, r, tag}, n});
    rep.add(run_axiom(suite, "tensor_action_law", max_degree, tasks.size(),
                      [&](std::size_t i) -> std::optional<Witness> {
                        const auto& [t, n] = tasks[i];
                        const auto perms = all_permutations(n);
                        for (const auto& s : perms)
                          for (const auto& u : perms) {
                            auto lhs = shuffle_tensor_action(shuffle_tensor_action(t, s), u);
                            auto rhs = shuffle_tensor_action(t, compose(s, u));
                            if (auto w = compare(to_text(t) + " ; " + to_text(s) + " ; " + to_text(u),
                                                 PermTensor(lhs), PermTensor(rhs)))
                              return w;
                          }
                        return std::nullopt;
                      },
                      policy));
  }
  {
    std::vector<std::pair<int, int>> tasks;
    for (int n = 0; n <= 10; ++n)
      for (int m = 0; n + m <= 10; ++m) tasks.emplace_back(n, m);
    const auto com = com_structure();
    rep.add(run_axiom(suite, "com_binomial", 10, tasks.size(),
                      [&](std::size_t i) {
                        auto [n, m] = tasks[i];
                        ComTerm t = com_hat_product(n, m);
                        return compare("X^" + std::to_string(n) + " ; X^" + std::to_string(m),
                                       hat_product(com, "mul", ComMonomial{n}, ComMonomial{m}),
                                       LinComb<ComMonomial>(ComMonomial{t.degree}, t.coeff));
                      },
                      policy));
  }
  {
    auto deconcat = words_structure(2, false);
    auto unshuffle = words_structure(2, true);
    rep.add(check_associative(deconcat, "shuffle", max_degree, policy, suite));
    rep.add(check_hopf_compat(deconcat, "shuffle", max_degree, policy, suite));
    rep.add(check_coassociative(deconcat, max_degree, policy, suite));
    rep.add(check_hopf_compat(unshuffle, "concat", max_degree, policy, suite));
    rep.add(check_cocommutative(unshuffle, max_degree, policy, suite));
    rep.add(check_transpose<Word>(suite, "transpose(shuffle, unshuffle)", deconcat.basis, deconcat.degree,
                                  deconcat.product("shuffle"), unshuffle.coproduct, max_degree, policy));
    rep.add(check_transpose<Word>(suite, "transpose(concat, deconcat)", deconcat.basis, deconcat.degree,
                                  deconcat.product("concat"), deconcat.coproduct, max_degree, policy));
  }
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport mr_suite(int max_degree, const ExecPolicy& policy, const MrBindings& bindings) {
  const std::string suite = "mr";
  CheckReport rep;
  GradedStructure<Permutation> bar;
  bar.name = suite;
  bar.basis = all_permutations;
  bar.degree = perm_degree;
  bar.products = {{"hat", bindings.hat}, {"bar", bindings.bar}};
  bar.coproduct = mr_bar_coproduct;
  bar.unit = Permutation{};
  GradedStructure<Permutation> hatco = bar;
  hatco.coproduct = mr_hat_coproduct;

  rep.add(check_associative(bar, "hat", max_degree, policy, suite));
  rep.add(check_unit(bar, "hat", max_degree, policy, suite));
  rep.add(check_coassociative(bar, max_degree, policy, suite + " barΔ"));
  rep.add(check_counit(bar, max_degree, policy, suite + " barΔ"));
  rep.add(check_hopf_compat(bar, "hat", max_degree, policy, suite + " barΔ"));
  rep.add(check_associative(hatco, "bar", max_degree, policy, suite));
  rep.add(check_unit(hatco, "bar", max_degree, policy, suite));
  rep.add(check_coassociative(hatco, max_degree, policy, suite + " hatΔ"));
  rep.add(check_counit(hatco, max_degree, policy, suite + " hatΔ"));
  rep.add(check_cocommutative(hatco, max_degree, policy, suite + " hatΔ"));
  rep.add(check_hopf_compat(hatco, "bar", max_degree, policy, suite + " hatΔ"));
  rep.add(check_uiP(bar, "bar", max_degree, policy, suite + " barΔ"));
  rep.add(check_2as(bar, "hat", "bar", max_degree, policy, suite + " barΔ"));
  rep.add(check_twisted_hopf_compat(as_structure(), "concat", max_degree, policy, suite + " twisted"));
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport ctd_relations(const TwistedStructure<SetComposition>& comp, int max_degree, const ExecPolicy& policy) {
  const std::string suite = "permutohedron ctd";
  CheckReport rep;
  auto G = symmetrize(comp, {{Sym::hat, "prec"}, {Sym::hat, "succ"}, {Sym::hat, "dot"}}, Sym::bar);
  const auto& prec = G.product("hat prec");
  const auto& succ = G.product("hat succ");
  const auto& dot = G.product("hat dot");
  auto triples = positive_tuples(G.basis, 3, max_degree, sc_size);
  auto pairs = positive_tuples(G.basis, 2, max_degree, sc_size);
  using SC = SetComposition;
  auto L = [](const SC& x) { return ScComb(x); };

  rep.add(check_relation<SC>(suite, "(x<y)<z = x<(y<z + z<y + y.z)", triples,
                             [&](const SC& x, const SC& y, const SC& z) {
                               ScComb inner = prec(y, z) + prec(z, y) + dot(y, z);
                               return std::pair{product_of(prec, prec(x, y), L(z)), product_of(prec, L(x), inner)};
                             },
                             max_degree, policy));
  rep.add(check_relation<SC>(suite, "(x.y)<z = x.(y<z)", triples,
                             [&](const SC& x, const SC& y, const SC& z) {
                               return std::pair{product_of(prec, dot(x, y), L(z)), product_of(dot, L(x), prec(y, z))};
                             },
                             max_degree, policy));
  rep.add(check_relation<SC>(suite, "(x.y).z = x.(y.z)", triples,
                             [&](const SC& x, const SC& y, const SC& z) {
                               return std::pair{product_of(dot, dot(x, y), L(z)), product_of(dot, L(x), dot(y, z))};
                             },
                             max_degree, policy));
  rep.add(run_axiom(suite, "x.y = y.x", max_degree, pairs.size(),
                    [&](std::size_t i) {
                      const auto& t = pairs[i];
                      return compare(tuple_text(t), dot(t[0], t[1]), dot(t[1], t[0]));
                    },
                    policy));
  rep.add(run_axiom(suite, "x>y = y<x", max_degree, pairs.size(),
                    [&](std::size_t i) {
                      const auto& t = pairs[i];
                      return compare(tuple_text(t), succ(t[0], t[1]), prec(t[1], t[0]));
                    },
                    policy));
  return rep;
}

CheckReport permutohedron_suite(int max_degree, const ExecPolicy& policy, RuleBranch dropped) {
  const std::string suite = "permutohedron";
  CheckReport rep;
  const auto comp = comp_structure(dropped);
  rep.add(check_twisted_hopf_compat(comp, "wf", max_degree, policy, suite + " twisted"));
  rep.add(check_twisted_hopf_compat(comp, "wg", max_degree, policy, suite + " twisted"));
  rep.append(ctd_relations(comp, max_degree, policy));

  auto bar = symmetrize(comp, {{Sym::hat, "wf"}, {Sym::hat, "wg"}, {Sym::bar, "wf"}, {Sym::bar, "wg"}}, Sym::bar);
  rep.add(check_associative(bar, "hat wf", max_degree, policy, suite + " ctd"));
  rep.add(check_hopf_compat(bar, "hat wf", max_degree, policy, suite + " ctd"));
  rep.add(check_hopf_compat(bar, "hat wg", max_degree, policy, suite + " pi"));
  rep.add(check_coassociative(bar, max_degree, policy, suite + " barΔ"));
  rep.add(check_counit(bar, max_degree, policy, suite + " barΔ"));
  rep.add(check_uiP(bar, "bar wf", max_degree, policy, suite + " barΔ"));
  rep.add(check_uiP(bar, "bar wg", max_degree, policy, suite + " barΔ"));

  auto hat = symmetrize(comp, {{Sym::bar, "wf"}, {Sym::bar, "wg"}}, Sym::hat);
  const std::string chap = suite + " chapoton";
  rep.add(check_associative(hat, "bar wg", max_degree, policy, chap));
  rep.add(check_unit(hat, "bar wg", max_degree, policy, chap));
  rep.add(check_coassociative(hat, max_degree, policy, chap));
  rep.add(check_counit(hat, max_degree, policy, chap));
  rep.add(check_hopf_compat(hat, "bar wg", max_degree, policy, chap));
  rep.add(check_hopf_compat(hat, "bar wf", max_degree, policy, suite + " ncqsym"));

  const int d3 = std::min(max_degree, 3);
  const auto ps = ps_structure();
  rep.add(check_twisted_hopf_compat(ps, "concat", d3, policy, suite + " patras-schocker"));
  auto psg = symmetrize(ps, {{Sym::hat, "concat"}}, Sym::bar);
  rep.add(check_hopf_compat(psg, "hat concat", d3, policy, suite + " patras-schocker"));

  const auto zin = zin_structure();
  const std::string zs = suite + " zinbiel";
  rep.add(check_twisted_hopf_compat(zin, "mz", max_degree, policy, zs));
  auto zbar = symmetrize(zin, {{Sym::hat, "mz"}}, Sym::bar);
  rep.add(check_associative(zbar, "hat mz", max_degree, policy, zs));
  rep.add(check_commutative(zbar, "hat mz", max_degree, policy, zs));
  rep.add(check_hopf_compat(zbar, "hat mz", max_degree, policy, zs));
  auto zhat = symmetrize(zin, {{Sym::bar, "mz"}}, Sym::hat);
  rep.add(check_hopf_compat(zhat, "bar mz", max_degree, policy, zs));

  // Degree-0 projection.
  auto wf_hat = symmetrize(comp, {{Sym::hat, "wf"}}, Sym::bar).product("hat wf");
  auto mz_hat = zbar.product("hat mz");
  auto pairs = basis_tuples(basis_by_degree(comp.basis, max_degree), 2, max_degree);
  rep.add(run_axiom(suite + " projection", "pi(hat wf) = hat mz(pi, pi)", max_degree, pairs.size(),
                    [&](std::size_t i) {
                      const auto& t = pairs[i];
                      PermComb lhs = wf_hat(t[0], t[1]).map(pi_ctd);
                      PermComb rhs = product_of(mz_hat, pi_ctd(t[0]), pi_ctd(t[1]));
                      return compare(tuple_text(t), lhs, rhs);
                    },
                    policy));
  auto singles = basis_tuples(basis_by_degree(comp.basis, max_degree), 1, max_degree);
  rep.add(run_axiom(suite + " projection", "(pi x pi) Δ = Δ_Z pi", max_degree, singles.size(),
                    [&](std::size_t i) {
                      const auto& p = singles[i][0];
                      PermTensor lhs;
                      for (const auto& [t, c] : comp.coproduct(p))
                        if (t.left.degree() == 0 && t.right.degree() == 0)
                          lhs.add({sc0_to_perm(t.left), sc0_to_perm(t.right), t.tag}, c);
                      PermTensor rhs;
                      for (const auto& [s, c] : pi_ctd(p)) rhs.add_scaled(zin.coproduct(s), c);
                      return compare(to_text(p), lhs, rhs);
                    },
                    policy));
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport duality_suite(int max_degree, const ExecPolicy& policy) {
  const std::string suite = "duality";
  const int d = std::min(max_degree, 3);
  CheckReport rep;
  const auto comp = comp_structure();
  const auto ps = ps_structure();
  rep.add(check_twisted_transpose(suite, "twisted transpose(concat, Δ)", comp, "concat", d, policy));
  rep.add(check_twisted_transpose(suite, "twisted transpose(wf, δ)", ps, "wf", d, policy));

  auto delta_bar = symmetrize(comp, {{Sym::hat, "concat"}, {Sym::bar, "concat"}}, Sym::bar);
  auto delta_hat = symmetrize(comp, {}, Sym::hat);
  auto ps_bar = symmetrize(ps, {{Sym::hat, "wf"}, {Sym::bar, "wf"}}, Sym::bar);
  auto ps_hat = symmetrize(ps, {}, Sym::hat);
  rep.add(check_transpose<SetComposition>(suite, "transpose(hat concat, hat Δ)", comp.basis, comp.degree,
                                          delta_bar.product("hat concat"), delta_hat.coproduct, d, policy));
  rep.add(check_transpose<SetComposition>(suite, "transpose(bar concat, bar Δ)", comp.basis, comp.degree,
                                          delta_bar.product("bar concat"), delta_bar.coproduct, d, policy));
  rep.add(check_transpose<SetComposition>(suite, "transpose(hat wf, hat δ)", comp.basis, comp.degree,
                                          ps_bar.product("hat wf"), ps_hat.coproduct, d, policy));
  rep.add(check_transpose<SetComposition>(suite, "transpose(bar wf, bar δ)", comp.basis, comp.degree,
                                          ps_bar.product("bar wf"), ps_bar.coproduct, d, policy));
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport td_relations(int max_degree, const ExecPolicy& policy) {
  const std::string suite = "associahedron td";
  CheckReport rep;
  auto triples = positive_tuples<PlanarTree>(all_trees, 3, max_degree, tree_degree);
  using T = PlanarTree;
  auto L = [](const T& x) { return TreeComb(x); };
  auto P = [](const TreeComb& a, const TreeComb& b) { return td_compose(Generator::prec, a, b); };
  auto S = [](const TreeComb& a, const TreeComb& b) { return td_compose(Generator::succ, a, b); };
  auto D = [](const TreeComb& a, const TreeComb& b) { return td_compose(Generator::dot, a, b); };
  auto St = [](const TreeComb& a, const TreeComb& b) { return star(a, b); };
  struct Rel {
    const char* name;
    std::function<std::pair<TreeComb, TreeComb>(const TreeComb&, const TreeComb&, const TreeComb&)> fn;
  };
  std::vector<Rel> rels = {
      {"(x<y)<z = x<(y*z)", [&](auto& x, auto& y, auto& z) { return std::pair{P(P(x, y), z), P(x, St(y, z))}; }},
      {"(x>y)<z = x>(y<z)", [&](auto& x, auto& y, auto& z) { return std::pair{P(S(x, y), z), S(x, P(y, z))}; }},
      {"(x*y)>z = x>(y>z)", [&](auto& x, auto& y, auto& z) { return std::pair{S(St(x, y), z), S(x, S(y, z))}; }},
      {"(x>y).z = x>(y.z)", [&](auto& x, auto& y, auto& z) { return std::pair{D(S(x, y), z), S(x, D(y, z))}; }},
      {"(x<y).z = x.(y>z)", [&](auto& x, auto& y, auto& z) { return std::pair{D(P(x, y), z), D(x, S(y, z))}; }},
      {"(x.y)<z = x.(y<z)", [&](auto& x, auto& y, auto& z) { return std::pair{P(D(x, y), z), D(x, P(y, z))}; }},
      {"(x.y).z = x.(y.z)", [&](auto& x, auto& y, auto& z) { return std::pair{D(D(x, y), z), D(x, D(y, z))}; }},
  };
  for (const auto& r : rels)
    rep.add(check_relation<T>(suite, r.name, triples,
                              [&](const T& x, const T& y, const T& z) { return r.fn(L(x), L(y), L(z)); },
                              max_degree, policy));
  return rep;
}

CheckReport associahedron_suite(int max_degree, const ExecPolicy& policy) {
  const std::string suite = "associahedron";
  CheckReport rep;
  rep.append(td_relations(max_degree, policy));
  auto G = td_structure(false);
  auto Gb = td_structure(true);
  rep.add(check_associative(G, "star", max_degree, policy, suite));
  rep.add(check_unit(G, "star", max_degree, policy, suite));
  rep.add(check_coassociative(G, max_degree, policy, suite + " Δ"));
  rep.add(check_counit(G, max_degree, policy, suite + " Δ"));
  rep.add(check_hopf_compat(G, "star", max_degree, policy, suite + " Δ"));
  rep.add(check_coassociative(Gb, max_degree, policy, suite + " barΔ"));
  rep.add(check_counit(Gb, max_degree, policy, suite + " barΔ"));
  rep.add(check_uiP(Gb, "star", max_degree, policy, suite + " barΔ"));

  const int d3 = std::min(max_degree, 3);
  Product<PlanarTree> bs = [](const PlanarTree& t, const PlanarTree& s) { return TreeComb(backslash(t, s)); };
  rep.add(check_transpose<PlanarTree>(suite + " dual", "transpose(backslash, barΔ)", G.basis, G.degree, bs,
                                      Gb.coproduct, d3, policy));
  auto D = dual_structure(G, {{"backslash", bs}}, {{"Δ", G.coproduct}}, "star", d3);
  rep.add(check_2as(D, "tΔ", "backslash", d3, policy, suite + " dual"));
  rep.add(check_associative(D, "backslash", max_degree, policy, suite + " dual"));
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport maps_suite(int max_degree, const ExecPolicy& policy) {
  const std::string suite = "maps";
  CheckReport rep;
  {
    PlanarTree got = phi(parse_set_composition("(34,1,56,2)"));
    PlanarTree want = parse_tree("((| (| |)) | (| | |))");
    rep.add(simple_result(suite, "phi worked example", 6, got == want, "",
                          got == want ? std::nullopt
                                      : std::optional<Witness>(Witness{"(34,1,56,2)", to_text(got), to_text(want)})));
  }
  auto comps = basis_tuples<SetComposition>(basis_by_degree<SetComposition>(all_set_compositions, max_degree), 1,
                                            max_degree);
  rep.add(run_axiom(suite, "theta = phi o reverse", max_degree, comps.size(),
                    [&](std::size_t i) {
                      const auto& p = comps[i][0];
                      return compare(to_text(p), TreeComb(theta(p)), TreeComb(phi(sc_reverse(p))));
                    },
                    policy));
  {
    bool ok = true;
    std::string note;
    for (int n = 0; n <= std::min(max_degree, 3); ++n) {
      std::set<PlanarTree> image;
      for (const auto& p : all_set_compositions(n)) image.insert(theta(p));
      ok = ok && image.size() == all_trees(n).size();
    }
    rep.add(simple_result(suite, "theta surjective", std::min(max_degree, 3), ok, note));
  }
  {
    bool ok = true;
    std::string note;
    for (int n = 1; n <= max_degree + 1; ++n) {
      std::size_t total = 0;
      std::vector<PermComb> images;
      for (const auto& t : all_binary_trees(n)) {
        PermComb v = psi0(t);
        total += v.size();
        images.push_back(std::move(v));
      }
      std::size_t fact = all_permutations(n).size();
      std::size_t r = rank(std::span<const PermComb>(images));
      if (total != fact || r != images.size()) {
        ok = false;
        note += "n=" + std::to_string(n) + " fibers " + std::to_string(total) + " rank " + std::to_string(r) + "; ";
      }
    }
    rep.add(simple_result(suite, "psi0 fibers partition S_n, psi0 injective", max_degree + 1, ok, note));
  }
  auto dend = dend_structure();
  rep.add(check_associative(dend, "dend", max_degree, policy, suite + " dend"));
  rep.add(check_hopf_compat(dend, "dend", max_degree, policy, suite + " dend"));
  auto bin_pairs = basis_tuples(basis_by_degree(dend.basis, max_degree), 2, max_degree);
  rep.add(run_axiom(suite, "psi0(s *_Y t) = psi0(s) hat* psi0(t)", max_degree, bin_pairs.size(),
                    [&](std::size_t i) {
                      const auto& t = bin_pairs[i];
                      PermComb lhs;
                      for (const auto& [b, c] : dend_product(t[0], t[1])) lhs.add_scaled(psi0(b), c);
                      return compare(tuple_text(t), lhs, mr_product(psi0(t[0]), psi0(t[1])));
                    },
                    policy));
  auto bins = basis_tuples(basis_by_degree(dend.basis, max_degree), 1, max_degree);
  rep.add(run_axiom(suite, "(psi0 x psi0) Δ_Y = barΔ psi0", max_degree, bins.size(),
                    [&](std::size_t i) {
                      const auto& t = bins[i][0];
                      PermTensor lhs;
                      for (const auto& [b, c] : dend_coproduct(t))
                        for (const auto& [l, cl] : psi0(b.left))
                          for (const auto& [r, cr] : psi0(b.right)) lhs.add({l, r, std::nullopt}, c * cl * cr);
                      PermTensor rhs;
                      for (const auto& [s, c] : psi0(t)) rhs.add_scaled(mr_bar_coproduct(s), c);
                      return compare(to_text(t), lhs, rhs);
                    },
                    policy));
  auto trees = basis_tuples<PlanarTree>(basis_by_degree<PlanarTree>(all_trees, max_degree), 1, max_degree);
  rep.add(run_axiom(suite, "pi_CTD o psi = psi0 o pi_TD", max_degree, trees.size(),
                    [&](std::size_t i) {
                      const auto& t = trees[i][0];
                      PermComb lhs;
                      for (const auto& [p, c] : psi(t)) lhs.add_scaled(pi_ctd(p), c);
                      PermComb rhs;
                      for (const auto& [b, c] : dend_projection(t)) rhs.add_scaled(psi0(b), c);
                      return compare(to_text(t), lhs, rhs);
                    },
                    policy));

  const int d3 = std::min(max_degree, 3);
  auto tree_pairs = basis_tuples<PlanarTree>(basis_by_degree<PlanarTree>(all_trees, d3), 2, d3);
  rep.add(run_axiom(suite, "psi(s*t) = bar wf(psi s, psi t)", d3, tree_pairs.size(),
                    [&](std::size_t i) {
                      const auto& t = tree_pairs[i];
                      ScComb lhs;
                      for (const auto& [b, c] : star(t[0], t[1])) lhs.add_scaled(psi(b), c);
                      ScComb rhs = bilinear_extend(
                          [](const SetComposition& a, const SetComposition& b) { return w_product(a, b); }, psi(t[0]),
                          psi(t[1]));
                      return compare(tuple_text(t), lhs, rhs);
                    },
                    policy));
  auto tree_singles = basis_tuples<PlanarTree>(basis_by_degree<PlanarTree>(all_trees, d3), 1, d3);
  rep.add(run_axiom(suite, "(psi x psi) Δ_T = hatΔ psi", d3, tree_singles.size(),
                    [&](std::size_t i) {
                      const auto& t = tree_singles[i][0];
                      ScTensor lhs;
                      for (const auto& [b, c] : tree_coproduct(t))
                        for (const auto& [l, cl] : psi(b.left))
                          for (const auto& [r, cr] : psi(b.right)) lhs.add({l, r, std::nullopt}, c * cl * cr);
                      ScTensor rhs;
                      for (const auto& [p, c] : psi(t)) rhs.add_scaled(strip_tags(sc_coproduct(p)), c);
                      return compare(to_text(t), lhs, rhs);
                    },
                    policy));
  auto perms = basis_tuples<Permutation>(basis_by_degree<Permutation>(all_permutations, max_degree + 2), 1,
                                         max_degree + 2);
  // Reverse-then-invert squares to conjugation by the longest element.
  rep.add(run_axiom(suite, "alpha o alpha = w0 s w0", max_degree + 2, perms.size(),
                    [&](std::size_t i) {
                      const auto& s = perms[i][0];
                      std::vector<int> w(static_cast<std::size_t>(s.size()));
                      for (int k = 0; k < s.size(); ++k) w[static_cast<std::size_t>(k)] = s.size() - k;
                      Permutation w0{w};
                      return compare(to_text(s), PermComb(alpha(alpha(s))), PermComb(compose(compose(w0, s), w0)));
                    },
                    policy));
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport sectors_suite(int max_degree, const ExecPolicy& policy) {
  const std::string suite = "sectors";
  const int d3 = std::min(max_degree, 3);
  CheckReport rep;
  struct Task {
    Generator g;
    PlanarTree y;
  };
  std::vector<Task> tasks;
  for (Generator g : {Generator::prec, Generator::succ, Generator::dot})
    for (int d = 1; d <= d3; ++d)
      for (const auto& y : all_trees(d)) tasks.push_back({g, y});
  rep.add(run_axiom(suite, "g o_i y = inductive rules", d3, tasks.size(),
                    [&](std::size_t i) -> std::optional<Witness> {
                      const auto& [g, y] = tasks[i];
                      PlanarTree x = generator_tree(g);
                      const std::string tag = std::string(generator_name(g)) + " ; " + to_text(y);
                      if (auto w = compare(tag + " ; sector 1", sector_insert(x, 1, y), td_compose(g, y, tree_y())))
                        return w;
                      return compare(tag + " ; sector 2", sector_insert(x, 2, y), td_compose(g, tree_y(), y));
                    },
                    policy));
  {
    PlanarTree x = generator_tree(Generator::prec);
    TreeComb r = sector_insert(x, 1, x);
    rep.add(simple_result(suite, "worked example o_1 has 3 terms", 2, r.size() == 3, std::to_string(r.size()) + " terms"));
  }
  auto trees = basis_tuples<PlanarTree>(basis_by_degree<PlanarTree>(all_trees, max_degree), 1, max_degree);
  rep.add(run_axiom(suite, "unit laws", max_degree, trees.size(),
                    [&](std::size_t i) -> std::optional<Witness> {
                      const auto& x = trees[i][0];
                      if (x.is_leaf()) return std::nullopt;
                      for (int s = 1; s <= x.degree(); ++s)
                        if (auto w = compare(to_text(x) + " o_" + std::to_string(s) + " Y", sector_insert(x, s, tree_y()),
                                             TreeComb(x)))
                          return w;
                      return compare("Y o_1 " + to_text(x), sector_insert(tree_y(), 1, x), TreeComb(x));
                    },
                    policy));
  return rep;
}

// ---------------------------------------------------------------------------

CheckReport freeness_suite(int max_degree, const ExecPolicy& policy) {
  (void)policy;
  const std::string suite = "freeness";
  CheckReport rep;
  {
    const int n = std::max(max_degree, 5);
    GradedStructure<Permutation> G;
    G.name = suite;
    G.basis = all_permutations;
    G.degree = perm_degree;
    G.coproduct = mr_bar_coproduct;
    G.unit = Permutation{};
    IntSeries dims = dimension_series<Permutation>(all_permutations, n);
    IntSeries prim = primitive_dims(G, n);
    IntSeries connected;
    for (int k = 1; k <= n; ++k) {
      std::int64_t c = 0;
      for (const auto& s : all_permutations(k)) c += is_connected(s) ? 1 : 0;
      connected.dims.push_back(c);
    }
    auto r = freeness_report(suite + " permutations", dims, prim);
    r.max_degree = n;
    rep.add(r);
    rep.add(simple_result(suite + " permutations", "prim = connected counts", n, prim == connected,
                          "connected " + to_text(connected)));
  }
  {
    const int n = max_degree;
    auto comp = symmetrize(comp_structure(), {}, Sym::bar);
    IntSeries dims = dimension_series<SetComposition>(all_set_compositions, n);
    IntSeries prim = primitive_dims(comp, n);
    IntSeries reduced;
    for (int k = 1; k <= n; ++k) {
      std::int64_t c = 0;
      for (const auto& p : all_set_compositions(k)) c += is_reduced(p) ? 1 : 0;
      reduced.dims.push_back(c);
    }
    auto r = freeness_report(suite + " set compositions", dims, prim);
    r.max_degree = n;
    rep.add(r);
    rep.add(simple_result(suite + " set compositions", "prim = reduced counts", n, prim == reduced,
                          "reduced " + to_text(reduced)));
  }
  {
    const int n = max_degree;
    auto G = td_structure(true);
    IntSeries dims = dimension_series<PlanarTree>(all_trees, n);
    IntSeries prim = primitive_dims(G, n);
    IntSeries flagged;
    for (int k = 1; k <= n; ++k) {
      std::int64_t c = 0;
      for (const auto& t : all_trees(k)) c += t.children.back().is_leaf() ? 1 : 0;
      flagged.dims.push_back(c);
    }
    auto r = freeness_report(suite + " trees", dims, prim);
    r.max_degree = n;
    rep.add(r);
    rep.add(simple_result(suite + " trees", "prim = trees ending in a leaf", n, prim == flagged,
                          "right-flag " + to_text(flagged)));
  }
  return rep;
}

}  // namespace ohl
