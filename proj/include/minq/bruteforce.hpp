#pragma once

#include <set>
#include <vector>

#include "minq/weyl.hpp"

namespace minq {

// Brute-force oracles, independent of the root-set machinery they check.
// Only sensible for small groups (W(A_4), W(D_4), ...).

// The whole Weyl group, by closure under right multiplication.
std::vector<WeylElement> enumerate_group(const RootSystem& sys, size_t cap = 1000000);

// Closure of the given elements under multiplication.
std::vector<WeylElement> generate_subgroup(const RootSystem& sys,
                                           const std::vector<WeylElement>& gens,
                                           size_t cap = 1000000);

// {v in W_ambient : v u W_F = u W_F}, decided element by element over the
// full group: v is kept when Supp(v) lies in ambient and u^{-1} v u lies in
// the standard parabolic W_F.
std::vector<WeylElement> brute_force_coset_stabilizer(
    const RootSystem& sys, const std::vector<WeylElement>& full_group,
    const std::set<int>& ambient, const WeylElement& u, const std::set<int>& fixed_nodes);

bool same_element_set(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b);

}  // namespace minq
