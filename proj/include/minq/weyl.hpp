#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minq/rootsys.hpp"

namespace minq {

// A word in the simple reflections: 1-based node indices, leftmost letter
// applied last (w = s_{i_1} s_{i_2} ... s_{i_k} acts as the composite map).
using Word = std::vector<int>;

Word parse_word(const RootSystem& sys, const std::string& text);
std::string format_word(const Word& w);  // "6 5 2 4 3 1"

// Square integer matrix, row-major. Column j-1 holds the image of alpha_j
// in simple-root coordinates.
struct IntMat {
  int n = 0;
  std::vector<int> a;

  static IntMat ident(int n);
  int at(int r, int c) const { return a[size_t(r) * n + c]; }
  int& at(int r, int c) { return a[size_t(r) * n + c]; }
  friend bool operator==(const IntMat&, const IntMat&) = default;
  friend auto operator<=>(const IntMat&, const IntMat&) = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
RootVec mat_apply(const IntMat& m, const RootVec& v);

// A Weyl group element as its exact action on the root lattice, together
// with the action of its inverse and the cached length.
struct WeylElement {
  IntMat mat;
  IntMat inv;
  int len = 0;

  friend bool operator==(const WeylElement& x, const WeylElement& y) {
    return x.mat == y.mat;
  }
};

WeylElement identity_element(const RootSystem& sys);
WeylElement simple_reflection(const RootSystem& sys, int node);
// s_beta for any root beta.
WeylElement root_reflection(const RootSystem& sys, const RootVec& beta);
WeylElement from_word(const RootSystem& sys, const Word& word);
WeylElement mul(const RootSystem& sys, const WeylElement& x, const WeylElement& y);
WeylElement inverse_of(const WeylElement& w);

RootVec act(const WeylElement& w, const RootVec& v);
RootVec act_inverse(const WeylElement& w, const RootVec& v);

bool is_identity(const WeylElement& w);
// w^{-1}(alpha_i) < 0, i.e. l(s_i w) < l(w).
bool is_left_descent(const WeylElement& w, int node);
// w(alpha_i) < 0, i.e. l(w s_i) < l(w).
bool is_right_descent(const WeylElement& w, int node);

int inversion_count(const RootSystem& sys, const IntMat& mat);

// Deterministic reduced word: repeatedly strip the smallest left descent.
Word reduced_word(const RootSystem& sys, const WeylElement& w);

// Supp(w): the letters of any reduced word.
std::set<int> support(const RootSystem& sys, const WeylElement& w);

// I^w = {alpha in S : w(alpha) > 0}, the largest I with w in W^I.
std::set<int> upper_index_set(const RootSystem& sys, const WeylElement& w);

// I_w = {alpha : s_alpha w <= w in W/W_{I^w}}, computed as
// {alpha : l(s_alpha w) < l(w)} united with {alpha : w^{-1}(alpha) in R_{I^w}}.
std::set<int> stabilizer_index_set(const RootSystem& sys, const WeylElement& w);

// w-perp: the simple roots whose reflection commutes with w.
std::set<int> perp_set(const RootSystem& sys, const WeylElement& w);

// Whether w(alpha) > 0 for every alpha in I.
bool in_quotient(const RootSystem& sys, const WeylElement& w, const std::set<int>& I);

// The permutation of {1..n+1} realized by w (type A only): entry i-1 = w(i).
std::vector<int> as_permutation(const RootSystem& sys, const WeylElement& w);

// A minuscule quotient W^I for I = S \ {alpha_node}. Carries the minuscule
// fundamental weight (in fundamental-weight coordinates) and the base
// reduced word of w_0^I used for canonical subexpression extraction.
struct CosetContext {
  const RootSystem* sys = nullptr;
  int node = 0;
  std::vector<int> minuscule_weight;  // pi_node, fundamental coordinates
  Word w0I_word;  // reduced word of the longest minimal representative
};

CosetContext make_coset_context(const RootSystem& sys, int node);

struct MinusculeElement {
  WeylElement w;
  Word bfs_word;                // reduced word read off the orbit BFS path
  std::vector<int> weight;      // w(pi_node) in fundamental-weight coordinates
};

// All of W^I, enumerated by BFS on the W-orbit of the minuscule weight.
// Elements appear in increasing length, deterministically.
std::vector<MinusculeElement> enumerate_minuscule(const CosetContext& ctx);

// Right-greedy subexpression of `base`: scanning base from the right, take
// each letter that is a right descent of what remains. For w <= product(base)
// this yields a reduced word of w. Throws NotMinimalRep otherwise.
Word right_greedy_subword(const RootSystem& sys, const Word& base, const WeylElement& w);

// The canonical reduced word of w in this quotient: the right-greedy
// subexpression of the w_0^I base word. For type A it recovers the
// block form (s_{a_1}..s_1)(s_{a_2}..s_2)..., for type D the v-block form,
// and for E6/E7 the subexpressions the exceptional catalogs are built on.
Word canonical_word(const CosetContext& ctx, const WeylElement& w);

// Block words. w_{b,a} = s_a s_{a-1} ... s_b (type A building block).
Word type_a_descending_run(int a, int b);
// v_{i,a}: s_a s_{a+1} ... s_{n-2} s_n for odd i, ... s_{n-1} for even i;
// the endpoint cases v_{i,n} = s_n (i odd) and v_{i,n-1} = s_{n-1} (i even).
Word type_d_block(int n, int i, int a);

// Letter images under the diagram automorphisms used for node reduction.
int d_swap_letter(int n, int letter);    // n-1 <-> n
int e6_swap_letter(int letter);          // 1<->6, 3<->5

}  // namespace minq
