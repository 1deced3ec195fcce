#pragma once

#include <map>
#include <string>
#include <vector>

#include "minq/quiver.hpp"

namespace minq {

// A reflection subgroup of W, recorded by its set of positive roots. The
// subgroups arising here are intersections of parabolic-type subgroups, so
// they are determined by their reflections.
struct ReflectionSubgroup {
  std::vector<int> ambient_nodes;          // ascending
  std::vector<RootVec> positive_root_set;  // sorted lexicographically
};

// positive_root_set = {b in R^+ : b in R_ambient and u^{-1}(b) in R_fixed}.
// Closure under root addition is asserted (InternalError on failure).
ReflectionSubgroup stabilizer_weyl_of_point(const RootSystem& sys,
                                            const std::set<int>& ambient,
                                            const WeylElement& u,
                                            const std::set<int>& fixed_nodes);

// Memoized brute-force closures: for a set D of simple nodes, the roots b
// whose reflection lies in the subgroup generated by {s_d : d in D}.
// BFS over group elements with a hard cap, so silent wrongness is impossible.
class SimpleGenCache {
 public:
  explicit SimpleGenCache(const RootSystem& sys, size_t element_cap = 1000000);
  const std::set<RootVec>& reflections_generated_by(const std::set<int>& D);

 private:
  const RootSystem* sys_;
  size_t cap_;
  std::map<IntMat, RootVec> reflection_of_;  // reflection matrix -> positive root
  std::map<std::vector<int>, std::set<RootVec>> memo_;
};

struct WeylEqualityReport {
  ReflectionSubgroup point_stab;  // W(G_{w_1, w_1 x_1}, T_{w_1})
  ReflectionSubgroup wx_stab;     // W(G_{w_1, w x}, T_{w_1})
  bool equal = false;
  bool inclusion_wx_in_point = false;
  bool simple_generated = false;  // point stabilizer generated by its simples
};

// Both stabilizers for a construction-1 decomposition, no hypothesis checks.
WeylEqualityReport compute_weyl_stabilizers(const RootSystem& sys,
                                            const CosetContext& ctx,
                                            const WeylElement& w,
                                            const GenDecomposition& d,
                                            SimpleGenCache& cache);

// The theorem-facing entry point: for type E the decomposition must be
// smooth (PreconditionViolated otherwise).
WeylEqualityReport verify_weyl_equality(const RootSystem& sys, const CosetContext& ctx,
                                        const WeylElement& w, const GenDecomposition& d,
                                        SimpleGenCache& cache);

struct RootInequalityReport {
  int alpha_node = 0;       // the unique simple root made negative by w_1^{-1}
  RootVec w1_inv_alpha;
  RootVec w_inv_alpha;
  bool holds = false;       // w1_inv_alpha - w_inv_alpha >= 0 coordinatewise
  bool vectors_equal = false;
  int m = 0;
  bool equality_iff_m1 = false;
};

RootInequalityReport root_inequality_check(const RootSystem& sys, const CosetContext& ctx,
                                           const WeylElement& w, const GenDecomposition& d);

// Type A / type D normal-form data.
struct PeakIndexData {
  std::vector<int> a_seq;           // a_1 < a_2 < ...
  std::vector<int> J;               // block indices of the peaks, ascending
  std::vector<int> standard_order;  // J in the standard order (A: ascending, D: descending)
};

// a_i = w(i) - 1 for 1 <= i <= r; J(w) = {1} u {j >= 2 : a_j - a_{j-1} >= 2}.
PeakIndexData type_a_normal_form(const CosetContext& ctx, const WeylElement& w);

// Blocks w = v_{k,a_k} ... v_{1,a_1} for the spinor nodes n, n-1;
// J(w) = {k} u {j < k : <alpha_{a_{j+1}}, alpha_{a_j}^vee> = 0}.
PeakIndexData type_d_normal_form(const CosetContext& ctx, const WeylElement& w);

struct LemmaReport {
  long tuples = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// The commutation identities behind the type-A claim, checked over every
// admissible parameter tuple in A_n.
LemmaReport lemma_slide_left(const RootSystem& sysA);        // s_l w' = w' s_j, l < a_i
LemmaReport lemma_slide_left_full(const RootSystem& sysA);   // consecutive a, l <= a_k
LemmaReport lemma_slide_right(const RootSystem& sysA);       // w' s_t = s_l w', t > b_k
LemmaReport lemma_slide_right_full(const RootSystem& sysA);  // consecutive a, t <= a_k
// s_i v_{l,a} = v_{l,a} s_{i-1} (and the fork cases) in D_n.
LemmaReport lemma_block_shift_d(const RootSystem& sysD);
// w_0^I equals the v-block decomposition of the longest minimal representative.
LemmaReport lemma_w0_blocks_d(const RootSystem& sysD);

// Per-ordering data for one full-support element of an exceptional quotient.
struct OrderingResult {
  std::vector<int> ordering;  // peak vertices in peel order
  bool smooth = false;
  std::vector<Word> factor_words;
  std::vector<std::pair<int, SystemType>> fibers;
};

struct CatalogRow {
  Word word;  // canonical word
  int length = 0;
  int peak_count = 0;
  bool standard_smooth = false;
  std::vector<OrderingResult> orderings;  // all m!, standard first
};

struct CatalogResult {
  SystemType type;
  int node = 0;
  int orbit_size = 0;
  int full_support = 0;
  std::vector<CatalogRow> rows;  // ordered by (length, word)
};

// All full-support w in W^I with every peak ordering, classified for
// smoothness with fiber profiles. Type E contexts only.
CatalogResult classify_exceptional(const CosetContext& ctx);

}  // namespace minq
