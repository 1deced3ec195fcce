#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "minq/catalog.hpp"

namespace minq {

using json = nlohmann::ordered_json;

// One verification suite run. `report` follows the shape
//   {"suite":..., "pass":..., "instances":..., "failures":[...],
//    "summary":{...}, "rows":[...]}
// where each row is
//   {"instance": {"type","rank","node","word","ordering"},
//    "weyl_equality", "simple_generated",
//    "root_inequality": {"alpha","w1_inv_alpha","w_inv_alpha","holds",
//                        "equality_iff_m1"},
//    "smooth", "fibers"}.
struct SuiteResult {
  std::string name;
  bool pass = true;
  long instances = 0;
  std::vector<std::string> failures;
  json report;
  double seconds = 0.0;

  void fail(const std::string& msg) {
    pass = false;
    failures.push_back(msg);
  }
};

// Exhaustive Weyl-group equality + simple generation over type A_n,
// 1 <= n <= max_rank, all nodes, all full-support elements, all orderings.
SuiteResult suite_weyl_equality_a(int max_rank, bool collect_rows = false);
// Same sweep over D_n, 4 <= n <= max_rank, nodes 1, n-1, n; equality is
// asserted, simple generation only tallied.
SuiteResult suite_weyl_equality_d(int max_rank, bool collect_rows = false);
// E6 node 1 and E7 node 7, smooth decompositions: equality + simple
// generation; non-smooth instances are tallied unfiltered.
SuiteResult suite_weyl_equality_e(bool collect_rows = false);

// The rank-8 two-block instance whose point stabilizer is not generated by
// the simple reflections it contains.
SuiteResult suite_remark_d8(bool collect_rows = false);

// Exceptional catalogs against the embedded fixtures (verdicts, factor
// words, fiber profiles).
SuiteResult suite_catalog_e6();
SuiteResult suite_catalog_e7();

// Root inequality over all instance sets (E restricted to smooth), the
// closed-form vector checks on sampled type-A instances, and the type-D
// case table for the standard decreasing ordering.
SuiteResult suite_root_inequality(int max_rank_a, int max_rank_d, bool collect_rows = false);

// The commutation-identity oracles and the w_0^I block decompositions,
// plus the simple-reflection transfer check on every instance.
SuiteResult suite_lemmas(int max_rank_a, int max_rank_d);

// Reflection-subgroup computation against brute-force coset stabilizers
// inside W(A_3), W(A_4), W(D_4).
SuiteResult suite_oracle_equivalence();

// Randomized commutation-move word pairs produce isomorphic colored quivers
// (A_4, D_4, E6; 100 pairs each, fixed seed).
SuiteResult suite_quiver_invariance(int pairs_per_type = 100);

std::vector<std::string> suite_names();
// Dispatch by name; "all" runs everything. Throws DomainError on unknown
// names.
std::vector<SuiteResult> run_suites(const std::string& name, int max_rank_a,
                                    int max_rank_d, bool collect_rows);

json catalog_to_json(const RootSystem& sys, const CatalogResult& cat);
json quiver_to_json(const QuiverW& q);
json decomposition_to_json(const RootSystem& sys, const GenDecomposition& d);

}  // namespace minq
