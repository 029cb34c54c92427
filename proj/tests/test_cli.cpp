#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "ohl/catalog.hpp"
#include "ohl/cli.hpp"

using namespace ohl;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

struct Sample {
  std::string a, b, unit;
  /// Re-parses a printed LinComb and prints it again.
  std::function<std::string(const std::string&)> reprint;
};

template <class B, class F>
std::function<std::string(const std::string&)> reprinter(F parse) {
  return [parse](const std::string& s) { return to_text(cli::parse_lincomb<B>(s, parse)); };
}

std::map<std::string, Sample> samples() {
  auto perm = reprinter<Permutation>([](std::string_view s) { return parse_permutation(s); });
  auto sc = reprinter<SetComposition>([](std::string_view s) { return parse_set_composition(s); });
  auto tree = reprinter<PlanarTree>([](std::string_view s) { return parse_tree(s); });
  auto word = reprinter<Word>([](std::string_view s) { return parse_word(s); });
  auto mono = reprinter<ComMonomial>([](std::string_view s) { return parse_com_monomial(s); });
  std::map<std::string, Sample> m;
  for (const char* s : {"mr-hat", "mr-bar", "mr-hatco", "mr-barco", "zin"}) m[s] = {"[1]", "[2,1]", "[]", perm};
  for (const char* s : {"ncqsym", "chapoton-g", "ctd", "pi", "ps-twisted"}) m[s] = {"{1}", "{2}|{1}", "{}", sc};
  m["td"] = {"(| |)", "(| (| |))", "|", tree};
  m["dend"] = {"(| |)", "(| |)", "|", tree};
  m["words"] = {"ab", "b", "ε", word};
  m["com"] = {"X^2", "X", "1", mono};
  return m;
}

}  // namespace

TEST_CASE("documented examples") {
  CHECK(trimmed(run({"mul", "--structure", "mr-hat", "[1]", "[2,1]"}).out) == "1*[1,3,2] + 1*[3,1,2] + 1*[3,2,1]");
  CHECK(trimmed(run({"compose", "--operad", "as", "[3,2,1,4]", "[2,1]", "[1,3,2]", "[1]", "[2,3,1]"}).out) ==
        "[6,5,2,4,3,1,8,9,7]");
  CHECK(trimmed(run({"map", "--name", "phi", "{3,4}|{1}|{5,6}|{2}"}).out) == "((| (| |)) | (| | |))");
  CHECK(trimmed(run({"map", "--name", "alpha", "[1,2]"}).out) == "[2,1]");
  CHECK(trimmed(run({"map", "--name", "psi0", "(| (| |))"}).out) == "1*[1,2]");
  CHECK(trimmed(run({"dims", "--family", "perms", "--max-degree", "5"}).out) == "1,1,2,6,24,120");
  CHECK(trimmed(run({"dims", "--family", "setcomps", "--max-degree", "4"}).out) == "1,1,3,13,75");
  CHECK(trimmed(run({"dims", "--family", "trees", "--max-degree", "4"}).out) == "1,1,3,11,45");
  CHECK(trimmed(run({"primitives", "--structure", "mr-hat", "--max-degree", "5"}).out) == "1,1,3,13,71");
  CHECK(trimmed(run({"series", "1,3,13,75"}).out) == "1,2,8,48");
}

TEST_CASE("other verbs") {
  CHECK(trimmed(run({"comul", "--structure", "mr-hat", "[1]"}).out) == "1*[1] ⊗ [] + 1*[] ⊗ [1]");
  CHECK(trimmed(run({"compose", "--operad", "ctd", "prec", "{1}", "{1}"}).out) == "1*{1}|{2}");
  CHECK(trimmed(run({"compose", "--operad", "td", "dot", "(| |)", "(| |)"}).out) == "1*(| | |)");
  CHECK(run({"compose", "--operad", "td", "--sector", "1", "(| (| |))", "(| (| |))"}).out.find(" + ") !=
        std::string::npos);
  CHECK(trimmed(run({"map", "--name", "theta", "{1}"}).out) == "(| |)");
  CHECK(trimmed(run({"dims", "--family", "trees", "--degree", "3"}).out) == "11");
  CHECK(trimmed(run({"series", "--family", "trees", "--max-degree", "4"}).out) == "1,2,6,22");
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--suite", "mr", "--max-degree", "2"}).code == cli::ok);
  CHECK(run({"mul", "--structure", "nope", "[1]"}).code == cli::usage);
  CHECK(run({"mul", "--structure", "mr-hat", "[1,1]"}).code == cli::usage);
  CHECK(run({"map", "--name", "psi0", "(| | |)"}).code == cli::usage);
  CHECK(run({"map", "--name", "psi0", "(| | |)"}).err.find("DomainMismatch") != std::string::npos);
  CHECK(run({"frobnicate"}).code == cli::usage);
  CHECK(run({}).code == cli::usage);
  CHECK(run({"mul", "--structure", "mr-hat", "--bogus", "[1]"}).code == cli::usage);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::usage);
  CHECK(run({"series", "2,1"}).code == cli::usage);
  CHECK(run({"dims", "--family", "perms", "--max-degree", "9"}).code == cli::usage);
  CHECK(run({"dims", "--family", "perms", "--max-degree", "9", "--unsafe-degree"}).code == cli::ok);
}

TEST_CASE("JSON-lines output") {
  Run r = run({"mul", "--structure", "mr-hat", "--json", "[1]", "[1]"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["coeff"] == "1");
  CHECK(rows[0]["basis"] == "[1,2]");
  CHECK(rows[1]["basis"] == "[2,1]");

  Run v = run({"verify", "--suite", "sectors", "--max-degree", "2", "--json"});
  REQUIRE(v.code == 0);
  std::istringstream vl(v.out);
  for (std::string line; std::getline(vl, line);) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["status"] == "PASS");
    CHECK(j["suite"] == "sectors");
  }
}

TEST_CASE("every structure's product output re-parses to itself") {
  const auto all = samples();
  REQUIRE(all.size() == cli::structure_names().size());
  for (const auto& name : cli::structure_names()) {
    INFO(name);
    REQUIRE(all.count(name) == 1);
    const Sample& s = all.at(name);
    Run r = run({"mul", "--structure", name, s.a, s.b});
    REQUIRE(r.code == 0);
    const std::string printed = trimmed(r.out);
    CHECK(s.reprint(printed) == printed);
    // Multiplying the printed combination by the unit goes through the CLI parser.
    Run again = run({"mul", "--structure", name, printed, s.unit});
    CHECK(again.code == 0);
    CHECK(trimmed(again.out) == printed);
  }
}

TEST_CASE("parse_lincomb") {
  auto perm = [](std::string_view s) { return parse_permutation(s); };
  auto c = cli::parse_lincomb<Permutation>("2*[1,2] + -1/3*[2,1]", perm);
  CHECK(c.coeff(parse_permutation("[1,2]")) == 2);
  CHECK(c.coeff(parse_permutation("[2,1]")) == Rational(-1, 3));
  CHECK(cli::parse_lincomb<Permutation>("0", perm).is_zero());
  CHECK(cli::parse_lincomb<Permutation>("[1] + -1*[1]", perm).is_zero());
  CHECK_THROWS_AS(cli::parse_lincomb<Permutation>("", perm), Error);
  CHECK_THROWS_AS(cli::parse_lincomb<Permutation>("1*2*[1]", perm), Error);
  CHECK(cli::split_top_level("[1,2] + {1}|{2} + (| |)", '+').size() == 3);
}

TEST_CASE("verify output is independent of jobs and seed") {
  const std::vector<std::string> base = {"verify", "--suite", "all", "--max-degree", "3"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args);
  };
  Run one = with({"--jobs", "1"});
  Run eight = with({"--jobs", "8"});
  CHECK(one.code == 0);
  CHECK(one.out == eight.out);
  ::setenv("OHL_SEED", "987654321", 1);
  Run seeded = with({"--jobs", "3"});
  ::setenv("OHL_SEED", "not-a-number", 1);
  Run bad_seed = with({});
  ::unsetenv("OHL_SEED");
  CHECK(seeded.out == one.out);
  CHECK(bad_seed.code == cli::usage);
  CHECK(run({"verify", "--suite", "all", "--jobs", "0"}).code == cli::usage);
}
