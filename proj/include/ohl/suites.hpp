#pragma once

// Exhaustive verification suites over the catalog structures.

#include <string>
#include <string_view>
#include <vector>

#include "ohl/bialgebra_lab.hpp"
#include "ohl/catalog.hpp"

namespace ohl {

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws UnknownStructure.
CheckReport run_suite(std::string_view name, int max_degree, const ExecPolicy& policy);

/// Products plugged into the Malvenuto-Reutenauer suite.
struct MrBindings {
  Product<Permutation> hat = [](const Permutation& a, const Permutation& b) { return mr_product(a, b); };
  Product<Permutation> bar = [](const Permutation& a, const Permutation& b) { return concat_product(a, b); };
};

CheckReport symmetric_suite(int max_degree, const ExecPolicy& policy);
CheckReport mr_suite(int max_degree, const ExecPolicy& policy, const MrBindings& bindings = {});
CheckReport permutohedron_suite(int max_degree, const ExecPolicy& policy, RuleBranch dropped = RuleBranch::none);
CheckReport duality_suite(int max_degree, const ExecPolicy& policy);
CheckReport associahedron_suite(int max_degree, const ExecPolicy& policy);
CheckReport maps_suite(int max_degree, const ExecPolicy& policy);
CheckReport sectors_suite(int max_degree, const ExecPolicy& policy);
CheckReport freeness_suite(int max_degree, const ExecPolicy& policy);

/// The commutative tridendriform relations for the hat-symmetrized CTD
/// operations, plus commutativity of hat dot; inputs of positive size.
CheckReport ctd_relations(const TwistedStructure<SetComposition>& comp, int max_degree, const ExecPolicy& policy);

/// The seven tridendriform relations for td_compose; inputs of positive degree.
CheckReport td_relations(int max_degree, const ExecPolicy& policy);

}  // namespace ohl
