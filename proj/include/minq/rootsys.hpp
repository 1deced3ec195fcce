#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "minq/errors.hpp"

namespace minq {

// Exact integer model of the simply-laced root systems A_n, D_n, E6/E7/E8.
//
// Node numbering is Bourbaki throughout:
//
//   A_n:   1 - 2 - 3 - ... - n                       (n >= 1)
//
//   D_n:   1 - 2 - ... - (n-2) - (n-1)               (n >= 4)
//                          |
//                          n
//
//   E_n:             2
//                    |
//          1 - 3 - 4 - 5 - 6 [- 7 [- 8]]             (n in {6,7,8})
//
// Roots are stored in simple-root coordinates only: a root is an integer
// vector of length rank whose entry i-1 is the coefficient of alpha_i.

enum class Family { A, D, E };

struct SystemType {
  Family family;
  int rank;

  std::string name() const;  // "A4", "D5", "E6", ...
  friend bool operator==(const SystemType&, const SystemType&) = default;
  friend auto operator<=>(const SystemType&, const SystemType&) = default;
};

// Throws InvalidRank unless (A, n>=1), (D, n>=4) or (E, n in {6,7,8}).
void validate_system_type(SystemType t);

// Parses "A", "D", "E" with a separate rank, or combined forms like "E6".
SystemType parse_system_type(const std::string& family, int rank);

using RootVec = std::vector<int>;

bool vec_nonneg(const RootVec& v);
bool vec_nonpos(const RootVec& v);
bool vec_zero(const RootVec& v);

// b - a has all coordinates >= 0. Defined for arbitrary integer vectors.
bool root_leq(const RootVec& a, const RootVec& b);

int height(const RootVec& v);  // sum of coordinates

std::string format_root(const RootVec& v);  // e.g. "a1+2a4+a5", "-a3"

struct RootSystem {
  SystemType type;
  int rank = 0;
  // cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>; symmetric with diagonal 2
  // and off-diagonal entries in {0,-1}.
  std::vector<std::vector<int>> cartan;
  // All positive roots, ordered by (height, lexicographic).
  std::vector<RootVec> positive_roots;
  // 1-based minuscule node indices, ascending.
  std::vector<int> minuscule_nodes;

  bool node_valid(int i) const { return i >= 1 && i <= rank; }
  bool adjacent(int i, int j) const;  // 1-based nodes
  bool is_minuscule_node(int i) const;

  RootVec simple_root(int i) const;  // 1-based

  bool is_positive_root(const RootVec& v) const;
  bool is_root(const RootVec& v) const;
  // Index into positive_roots, or -1. Negative roots are looked up negated.
  int positive_root_index(const RootVec& v) const;

  // <with, coroot_of^vee>. Throws NotARoot unless both arguments are in R.
  int pairing(const RootVec& coroot_of, const RootVec& with) const;

  // 1-based nodes with nonzero coefficient.
  std::set<int> root_support(const RootVec& v) const;

  std::map<RootVec, int> pos_index_;
};

RootSystem build_root_system(SystemType t);

// One connected component of an induced Dynkin subdiagram, classified as
// A/D/E with a relabeling onto the standard Bourbaki numbering.
struct DiagramComponent {
  SystemType type;
  // bourbaki_to_node[i-1] = original node carrying Bourbaki label i.
  std::vector<int> bourbaki_to_node;

  bool contains(int node) const;
  int bourbaki_label(int node) const;  // throws BadNodeIndex if absent
};

// Decomposes the induced subdiagram on `nodes` into connected components,
// each classified with its relabeling. Components are ordered by smallest
// original node. Throws UnclassifiableDiagram on non-ADE shapes (which
// cannot arise from subdiagrams of A/D/E).
std::vector<DiagramComponent> subdiagram_components(const RootSystem& sys,
                                                    const std::set<int>& nodes);

// Whether `node` is a minuscule node of its component under the relabeling.
bool node_minuscule_in_component(const DiagramComponent& comp, int node);

// The minuscule node table: all nodes (A), {1, n-1, n} (D), {1,6} (E6),
// {7} (E7), empty (E8).
std::vector<int> minuscule_nodes_for(SystemType t);

}  // namespace minq
