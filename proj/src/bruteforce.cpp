#include "minq/bruteforce.hpp"

#include <algorithm>
#include <map>

namespace minq {

std::vector<WeylElement> enumerate_group(const RootSystem& sys, size_t cap) {
  std::vector<WeylElement> gens;
  for (int i = 1; i <= sys.rank; ++i) gens.push_back(simple_reflection(sys, i));
  return generate_subgroup(sys, gens, cap);
}

std::vector<WeylElement> generate_subgroup(const RootSystem& sys,
                                           const std::vector<WeylElement>& gens,
                                           size_t cap) {
  std::map<IntMat, WeylElement> seen;
  std::vector<WeylElement> queue{identity_element(sys)};
  seen.emplace(queue[0].mat, queue[0]);
  while (!queue.empty()) {
    WeylElement cur = std::move(queue.back());
    queue.pop_back();
    for (const WeylElement& g : gens) {
      WeylElement next = mul(sys, cur, g);
      if (seen.size() >= cap) throw InternalError("group closure exceeded the element cap");
      if (seen.emplace(next.mat, next).second) queue.push_back(next);
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (auto& [m, w] : seen) out.push_back(w);
  return out;
}

std::vector<WeylElement> brute_force_coset_stabilizer(
    const RootSystem& sys, const std::vector<WeylElement>& full_group,
    const std::set<int>& ambient, const WeylElement& u, const std::set<int>& fixed_nodes) {
  std::vector<WeylElement> out;
  for (const WeylElement& v : full_group) {
    const std::set<int> supp = support(sys, v);
    if (!std::includes(ambient.begin(), ambient.end(), supp.begin(), supp.end())) continue;
    const WeylElement conj = mul(sys, mul(sys, inverse_of(u), v), u);
    const std::set<int> csupp = support(sys, conj);
    if (std::includes(fixed_nodes.begin(), fixed_nodes.end(), csupp.begin(), csupp.end()))
      out.push_back(v);
  }
  return out;
}

bool same_element_set(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b) {
  if (a.size() != b.size()) return false;
  std::vector<IntMat> ma, mb;
  for (const auto& w : a) ma.push_back(w.mat);
  for (const auto& w : b) mb.push_back(w.mat);
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  return ma == mb;
}

}  // namespace minq
