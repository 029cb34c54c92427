#include <doctest.h>

#include <atomic>

#include "ohl/catalog.hpp"
#include "ohl/suites.hpp"
#include "support/oracles.hpp"

using namespace ohl;

namespace {
Permutation P(std::string_view s) { return parse_permutation(s); }

/// σ∗̂τ with the shuffle term of index `skip` removed whenever it exists.
Product<Permutation> mr_without(std::size_t skip) {
  return [skip](const Permutation& a, const Permutation& b) {
    PermComb out;
    const auto sh = shuffles(a.size(), b.size());
    for (std::size_t k = 0; k < sh.size(); ++k)
      if (k != skip || sh.size() == 1) out.add(compose(direct_sum(a, b), shuffle_to_perm(sh[k])), 1);
    return out;
  };
}
}  // namespace

TEST_CASE("hat product on As is the MR product") {
  auto as = as_structure();
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 5; ++q)
      for (const auto& s : all_permutations(p))
        for (const auto& t : all_permutations(q)) {
          CHECK(hat_product(as, "concat", s, t) == oracle::mr_product(s, t));
          CHECK(bar_product(as, "concat", s, t) == PermComb(direct_sum(s, t)));
        }
  CHECK(hat_product(as, "concat", Permutation{}, P("[2,1]")) == PermComb(P("[2,1]")));
}

TEST_CASE("hat product on Com is the binomial product") {
  auto com = com_structure();
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; n + m <= 8; ++m) {
      auto v = hat_product(com, "mul", ComMonomial{n}, ComMonomial{m});
      CHECK(v == LinComb<ComMonomial>(ComMonomial{n + m}, oracle::binomial(n + m, n)));
    }
}

TEST_CASE("hat product rejects inhomogeneous input") {
  auto as = as_structure();
  PermComb mixed = PermComb(P("[1]")) + PermComb(P("[1,2]"));
  try {
    hat_product(as, "concat", mixed, PermComb(P("[1]")));
    FAIL("expected InhomogeneousInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InhomogeneousInput);
  }
}

TEST_CASE("bar and hat coproducts on As") {
  auto as = as_structure();
  for (int n = 0; n <= 4; ++n)
    for (const auto& s : all_permutations(n)) {
      CHECK(bar_coproduct(as, s) == mr_bar_coproduct(s));
      CHECK(hat_coproduct(as, s) == mr_hat_coproduct(s));
    }
  using TB = TensorBasis<Permutation, Permutation>;
  PermTensor prim = PermTensor(TB{Permutation{}, P("[1]"), std::nullopt}) + PermTensor(TB{P("[1]"), Permutation{}, std::nullopt});
  CHECK(bar_coproduct(as, P("[1]")) == prim);
  CHECK(hat_coproduct(as, P("[1]")) == prim);
}

TEST_CASE("axiom checkers on the MR structures") {
  auto bar = symmetrize(as_structure(), {{Sym::hat, "concat"}, {Sym::bar, "concat"}}, Sym::bar);
  auto hat = symmetrize(as_structure(), {{Sym::bar, "concat"}}, Sym::hat);
  ExecPolicy pol;
  CHECK(check_associative(bar, "hat concat", 4, pol).pass);
  CHECK(check_hopf_compat(bar, "hat concat", 4, pol).pass);
  CHECK(check_hopf_compat(hat, "bar concat", 4, pol).pass);
  CHECK(check_uiP(bar, "bar concat", 4, pol).pass);
  CHECK(check_2as(bar, "hat concat", "bar concat", 4, pol).pass);

  AxiomResult concat_hopf = check_hopf_compat(bar, "bar concat", 4, pol);
  CHECK_FALSE(concat_hopf.pass);
  REQUIRE(concat_hopf.witness.has_value());
  // Smallest violating pair: two degree-1 elements.
  CHECK(concat_hopf.witness->tuple == "[1] ; [1]");
}

TEST_CASE("mutated product is caught with a witness") {
  for (std::size_t k = 0; k < 2; ++k) {
    GradedStructure<Permutation> G = symmetrize(as_structure(), {{Sym::bar, "concat"}}, Sym::bar);
    G.products.push_back({"mutant", mr_without(k)});
    AxiomResult a = check_associative(G, "mutant", 3, ExecPolicy{});
    AxiomResult h = check_hopf_compat(G, "mutant", 3, ExecPolicy{});
    AxiomResult two = check_2as(G, "mutant", "bar concat", 3, ExecPolicy{});
    CHECK_FALSE((a.pass && h.pass));
    CHECK_FALSE(two.pass);
    CHECK(two.witness.has_value());
  }
}

TEST_CASE("words: shuffle and deconcatenation are Hopf, not infinitesimal") {
  auto deconcat = words_structure(2, false);
  AxiomResult ui = check_uiP(deconcat, "shuffle", 2, ExecPolicy{});
  CHECK_FALSE(ui.pass);
  REQUIRE(ui.witness.has_value());
  CHECK(check_hopf_compat(deconcat, "shuffle", 3, ExecPolicy{}).pass);
  CHECK(check_uiP(deconcat, "concat", 3, ExecPolicy{}).pass);
}

TEST_CASE("twisted compatibility detects the Patras-Schocker failure") {
  auto comp = comp_structure();
  CHECK(check_twisted_hopf_compat(comp, "wf", 3, ExecPolicy{}).pass);
  auto ps = ps_structure();
  CHECK_FALSE(check_twisted_hopf_compat(ps, "wf", 3, ExecPolicy{}).pass);
  CHECK(check_twisted_hopf_compat(ps, "concat", 3, ExecPolicy{}).pass);
}

TEST_CASE("Zinbiel coproduct is not cocommutative") {
  auto z = symmetrize(zin_structure(), {{Sym::hat, "mz"}}, Sym::hat);
  AxiomResult r = check_cocommutative(z, 3, ExecPolicy{});
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->tuple == "[1,3,2]");
}

TEST_CASE("primitive dimensions and freeness") {
  auto bar = symmetrize(as_structure(), {}, Sym::bar);
  IntSeries prim = primitive_dims(bar, 5);
  CHECK(prim.dims == std::vector<std::int64_t>{1, 1, 3, 13, 71});
  IntSeries dims = dimension_series<Permutation>(all_permutations, 5);
  CHECK(dims.dims == std::vector<std::int64_t>{1, 2, 6, 24, 120});
  CHECK(freeness_report("t", dims, prim).pass);
  CHECK_FALSE(freeness_report("t", dims, IntSeries{{1, 1, 3, 13, 70}}).pass);
  auto hat = symmetrize(as_structure(), {}, Sym::hat);
  CHECK(primitive_dims(hat, 1).dims == std::vector<std::int64_t>{1});
  auto comp = symmetrize(comp_structure(), {}, Sym::bar);
  CHECK(primitive_dims(comp, 4).dims == std::vector<std::int64_t>{1, 2, 8, 48});
}

TEST_CASE("first_violation returns the smallest index regardless of jobs and seed") {
  auto test = [](std::size_t i) -> std::optional<Witness> {
    if (i % 97 == 41 || i == 500) return Witness{std::to_string(i), "a", "b"};
    return std::nullopt;
  };
  for (int jobs : {1, 2, 8})
    for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
      auto v = first_violation(1000, test, ExecPolicy{jobs, seed});
      REQUIRE(v.has_value());
      CHECK(v->first == 41);
      CHECK(v->second.tuple == "41");
    }
  CHECK_FALSE(first_violation(0, test, ExecPolicy{4, 9}).has_value());
  std::atomic<int> calls{0};
  CHECK_FALSE(first_violation(
                  300, [&](std::size_t) -> std::optional<Witness> { ++calls; return std::nullopt; }, ExecPolicy{3, 5})
                  .has_value());
  CHECK(calls == 300);
}

TEST_CASE("reports") {
  auto bar = symmetrize(as_structure(), {{Sym::bar, "concat"}}, Sym::bar);
  CheckReport rep;
  rep.add(check_associative(bar, "bar concat", 2, ExecPolicy{}, "demo"));
  rep.add(check_hopf_compat(bar, "bar concat", 2, ExecPolicy{}, "demo"));
  CHECK_FALSE(rep.all_pass());
  const std::string text = rep.text();
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  const std::string json = rep.json_lines();
  CHECK(std::count(json.begin(), json.end(), '\n') == 2);
  for (const char* field : {"\"suite\"", "\"axiom\"", "\"status\"", "\"witness\""})
    CHECK(json.find(field) != std::string::npos);
  // An empty degree range is a vacuous pass.
  CHECK(check_associative(bar, "bar concat", -1, ExecPolicy{}).pass);
}

TEST_CASE("unknown suite") {
  try {
    run_suite("nope", 2, ExecPolicy{});
    FAIL("expected UnknownStructure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownStructure);
  }
}

TEST_CASE("mr and duality suites pass") {
  for (auto suite : {mr_suite(3, ExecPolicy{}), duality_suite(3, ExecPolicy{}), freeness_suite(3, ExecPolicy{})}) {
    INFO(suite.text());
    CHECK(suite.all_pass());
  }
}
