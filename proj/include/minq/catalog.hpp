#pragma once

#include <string>
#include <vector>

#include "minq/theorems.hpp"

namespace minq {

// The expected classification of the exceptional minuscule quotients:
// which full-support elements admit a smooth resolution for the standard
// peak ordering, the verdicts for the remaining orderings, and the fiber
// profiles of every smooth decomposition.

struct FixtureFiber {
  int length;
  const char* type;  // "A2", "D5", ...
};

struct FixtureEntry {
  const char* word;  // canonical word of the element
  int peak_count;
  bool standard_smooth;
  std::vector<const char*> standard_factors;
  std::vector<FixtureFiber> standard_fibers;  // when standard_smooth
  // Two-peak elements: the verdict for the swapped ordering.
  bool swapped_smooth = false;
  std::vector<const char*> swapped_factors;
  std::vector<FixtureFiber> swapped_fibers;  // when swapped_smooth
  // Over all m! orderings.
  int smooth_ordering_count = 0;
  // Three-peak element: the factor words of the second smooth ordering.
  std::vector<const char*> second_smooth_factors;
  std::vector<FixtureFiber> second_smooth_fibers;
};

struct FixtureCatalog {
  const char* name;  // "E6 node 1", "E7 node 7"
  std::vector<FixtureEntry> entries;
};

const FixtureCatalog& fixture_e6();
const FixtureCatalog& fixture_e7();

// Empty when the computed catalog matches the fixture; otherwise one line
// per mismatch. Elements absent from the fixture must be singular for every
// ordering.
std::vector<std::string> compare_catalog(const RootSystem& sys, const CatalogResult& got,
                                         const FixtureCatalog& expected);

}  // namespace minq
