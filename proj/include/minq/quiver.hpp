#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minq/weyl.hpp"

namespace minq {

// The quiver Q_w of a reduced word (beta_1, ..., beta_k): vertices [1,k]
// colored by beta, an arrow from i to j when <beta_j^vee, beta_i> != 0 and
// i < j < s(i) (or just i < j when the successor s(i) does not exist),
// the partial order R generated by the arrows, and the peaks (R-minimal
// vertices). Vertices are 1-based.
struct QuiverW {
  int k = 0;
  Word source_word;
  std::vector<int> colors;                    // colors[i-1] = beta(i)
  std::vector<std::pair<int, int>> arrows;    // sorted, i < j
  std::vector<std::vector<bool>> above;       // above[i-1][j-1]: i <_R j strictly
  std::vector<int> peaks;                     // ascending vertex indices

  bool vertex_valid(int i) const { return i >= 1 && i <= k; }
  // (i, j) in R, reflexively.
  bool le(int i, int j) const { return i == j || above[size_t(i) - 1][size_t(j) - 1]; }
};

std::optional<int> successor(const QuiverW& q, int i);
std::optional<int> predecessor(const QuiverW& q, int i);

// Throws NonReducedWord unless the word is reduced.
QuiverW build_quiver(const RootSystem& sys, const Word& word);

// Q_w(A): vertices i with (j, i) not in R for every peak j outside A.
// A must consist of peaks. Returns ascending vertex indices.
std::vector<int> subquiver_QA(const QuiverW& q, const std::vector<int>& A);

// A generalised reduced decomposition (w_1, ..., w_m) produced by
// construction 1: factor words partition the source word, lengths add,
// every factor quiver has a single peak.
struct GenDecomposition {
  Word source_word;
  std::vector<Word> factor_words;
  std::vector<WeylElement> factors;
  std::vector<int> peak_order;    // source-word vertex indices, peel order
  std::vector<int> peak_colors;   // beta(i_j) per factor
  bool good = false;
  bool smooth = false;

  int m() const { return int(factors.size()); }
};

// Peels Q_w along the given ordering of its peaks (vertex indices of the
// quiver built from `word`; must be a permutation of peaks(Q_w)).
// The standard ordering is the peaks list itself, ascending.
GenDecomposition construction_one(const RootSystem& sys, const Word& word,
                                  const std::vector<int>& peak_order);

// Validating constructor for hand-built decompositions (tests, CLI):
// checks the product, the length sum, and the single-peak property.
GenDecomposition make_gen_decomposition(const RootSystem& sys,
                                        const std::vector<Word>& factor_words);

struct GoodnessReport {
  bool good = false;
  int failing_index = 0;     // 1-based factor index, 0 when good
  std::string detail;
};

// The sandwich condition I^{w_i} ^ Supp(w_i) <= I_{w_{i+1}..w_m} <=
// w_i-perp u I^{w_i} for 1 <= i <= m-1, plus minusculity of the product.
GoodnessReport is_good(const RootSystem& sys, const GenDecomposition& d);

// Perrin's criterion: every factor's peak color is a minuscule node of the
// Dynkin component of Supp(w_j) containing it.
bool is_smooth(const RootSystem& sys, const GenDecomposition& d);

// (l(w_i), Dynkin type of Supp(w_i)) per factor.
std::vector<std::pair<int, SystemType>> fiber_profile(const RootSystem& sys,
                                                      const GenDecomposition& d);

// DOT export; peaks double-circled, byte-stable output.
std::string to_dot(const QuiverW& q);

}  // namespace minq
