#include "minq/rootsys.hpp"

#include <algorithm>
#include <queue>

namespace minq {

std::string SystemType::name() const {
  const char* fam = family == Family::A ? "A" : family == Family::D ? "D" : "E";
  return fam + std::to_string(rank);
}

void validate_system_type(SystemType t) {
  switch (t.family) {
    case Family::A:
      if (t.rank < 1) throw InvalidRank("type A requires rank >= 1");
      return;
    case Family::D:
      if (t.rank < 4) throw InvalidRank("type D requires rank >= 4");
      return;
    case Family::E:
      if (t.rank < 6 || t.rank > 8) throw InvalidRank("type E requires rank in {6,7,8}");
      return;
  }
  throw InvalidRank("unknown family");
}

SystemType parse_system_type(const std::string& family, int rank) {
  if (family.size() >= 2) {
    // combined form, e.g. "E6"
    int r = std::stoi(family.substr(1));
    if (rank != 0 && rank != r)
      throw InvalidRank("rank given twice with different values");
    rank = r;
  }
  Family f;
  switch (family.empty() ? '?' : family[0]) {
    case 'A': case 'a': f = Family::A; break;
    case 'D': case 'd': f = Family::D; break;
    case 'E': case 'e': f = Family::E; break;
    default: throw InvalidRank("unknown family '" + family + "'");
  }
  SystemType t{f, rank};
  validate_system_type(t);
  return t;
}

bool vec_nonneg(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
}

bool vec_nonpos(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
}

bool vec_zero(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

bool root_leq(const RootVec& a, const RootVec& b) {
  if (a.size() != b.size()) throw DomainError("root_leq: size mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (b[i] - a[i] < 0) return false;
  return true;
}

int height(const RootVec& v) {
  int h = 0;
  for (int c : v) h += c;
  return h;
}

std::string format_root(const RootVec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] > 0 && !out.empty()) out += "+";
    if (v[i] == -1)
      out += "-";
    else if (v[i] != 1)
      out += std::to_string(v[i]);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(SystemType t) {
  std::vector<std::pair<int, int>> edges;
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      edges.emplace_back(1, 3);
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, 4);
      break;
  }
  return edges;
}

size_t expected_positive_count(SystemType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return size_t(n) * (n + 1) / 2;
    case Family::D: return size_t(n) * (n - 1);
    case Family::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
  }
  return 0;
}

}  // namespace

std::vector<int> minuscule_nodes_for(SystemType t) {
  validate_system_type(t);
  switch (t.family) {
    case Family::A: {
      std::vector<int> all(t.rank);
      for (int i = 0; i < t.rank; ++i) all[i] = i + 1;
      return all;
    }
    case Family::D:
      return {1, t.rank - 1, t.rank};
    case Family::E:
      if (t.rank == 6) return {1, 6};
      if (t.rank == 7) return {7};
      return {};
  }
  return {};
}

RootSystem build_root_system(SystemType t) {
  validate_system_type(t);
  RootSystem sys;
  sys.type = t;
  sys.rank = t.rank;
  sys.cartan.assign(t.rank, std::vector<int>(t.rank, 0));
  for (int i = 0; i < t.rank; ++i) sys.cartan[i][i] = 2;
  for (auto [i, j] : dynkin_edges(t)) {
    sys.cartan[i - 1][j - 1] = -1;
    sys.cartan[j - 1][i - 1] = -1;
  }
  sys.minuscule_nodes = minuscule_nodes_for(t);

  // Enumerate R as the orbit of the simple roots under simple reflections.
  std::set<RootVec> roots;
  std::queue<RootVec> queue;
  for (int i = 1; i <= t.rank; ++i) {
    RootVec a(t.rank, 0);
    a[i - 1] = 1;
    roots.insert(a);
    queue.push(a);
  }
  while (!queue.empty()) {
    RootVec v = queue.front();
    queue.pop();
    for (int i = 0; i < t.rank; ++i) {
      int p = 0;
      for (int j = 0; j < t.rank; ++j) p += sys.cartan[i][j] * v[j];
      RootVec u = v;
      u[i] -= p;
      if (roots.insert(u).second) queue.push(u);
    }
  }
  for (const RootVec& v : roots)
    if (vec_nonneg(v)) sys.positive_roots.push_back(v);
  std::sort(sys.positive_roots.begin(), sys.positive_roots.end(),
            [](const RootVec& a, const RootVec& b) {
              int ha = height(a), hb = height(b);
              return ha != hb ? ha < hb : a < b;
            });
  if (sys.positive_roots.size() != expected_positive_count(t) ||
      roots.size() != 2 * sys.positive_roots.size())
    throw InternalError("root closure reached an unexpected cardinality for " + t.name());
  for (size_t k = 0; k < sys.positive_roots.size(); ++k)
    sys.pos_index_[sys.positive_roots[k]] = int(k);
  return sys;
}

bool RootSystem::adjacent(int i, int j) const {
  if (!node_valid(i) || !node_valid(j)) throw BadNodeIndex("node out of range");
  return i != j && cartan[i - 1][j - 1] != 0;
}

bool RootSystem::is_minuscule_node(int i) const {
  return std::find(minuscule_nodes.begin(), minuscule_nodes.end(), i) !=
         minuscule_nodes.end();
}

RootVec RootSystem::simple_root(int i) const {
  if (!node_valid(i)) throw BadNodeIndex("node out of range");
  RootVec v(rank, 0);
  v[i - 1] = 1;
  return v;
}

int RootSystem::positive_root_index(const RootVec& v) const {
  if (int(v.size()) != rank) return -1;
  if (vec_nonneg(v)) {
    auto it = pos_index_.find(v);
    return it == pos_index_.end() ? -1 : it->second;
  }
  if (vec_nonpos(v)) {
    RootVec u(v.size());
    for (size_t i = 0; i < v.size(); ++i) u[i] = -v[i];
    auto it = pos_index_.find(u);
    return it == pos_index_.end() ? -1 : it->second;
  }
  return -1;
}

bool RootSystem::is_positive_root(const RootVec& v) const {
  return int(v.size()) == rank && vec_nonneg(v) && pos_index_.count(v) != 0;
}

bool RootSystem::is_root(const RootVec& v) const {
  return positive_root_index(v) >= 0;
}

int RootSystem::pairing(const RootVec& coroot_of, const RootVec& with) const {
  if (!is_root(coroot_of) || !is_root(with))
    throw NotARoot("pairing arguments must be roots");
  // Simply-laced: <g, b^vee> = b^T C g.
  int p = 0;
  for (int i = 0; i < rank; ++i) {
    if (coroot_of[i] == 0) continue;
    for (int j = 0; j < rank; ++j) p += coroot_of[i] * cartan[i][j] * with[j];
  }
  return p;
}

std::set<int> RootSystem::root_support(const RootVec& v) const {
  std::set<int> s;
  for (int i = 0; i < int(v.size()); ++i)
    if (v[i] != 0) s.insert(i + 1);
  return s;
}

bool DiagramComponent::contains(int node) const {
  return std::find(bourbaki_to_node.begin(), bourbaki_to_node.end(), node) !=
         bourbaki_to_node.end();
}

int DiagramComponent::bourbaki_label(int node) const {
  for (size_t i = 0; i < bourbaki_to_node.size(); ++i)
    if (bourbaki_to_node[i] == node) return int(i) + 1;
  throw BadNodeIndex("node not in component");
}

namespace {

// Path from `from` away from `avoid`, in the induced graph. The diagram has
// no cycles, so the walk is forced.
std::vector<int> walk_branch(const RootSystem& sys, const std::set<int>& nodes,
                             int from, int avoid) {
  std::vector<int> path{from};
  int prev = avoid, cur = from;
  for (;;) {
    int next = 0;
    for (int v : nodes)
      if (v != prev && v != cur && sys.adjacent(cur, v)) {
        if (next != 0) throw UnclassifiableDiagram("branch within a branch");
        next = v;
      }
    if (next == 0) return path;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
}

DiagramComponent classify_component(const RootSystem& sys,
                                    const std::set<int>& comp) {
  DiagramComponent out;
  const int d = int(comp.size());
  std::vector<int> trivalent;
  for (int v : comp) {
    int deg = 0;
    for (int u : comp)
      if (u != v && sys.adjacent(u, v)) ++deg;
    if (deg >= 4) throw UnclassifiableDiagram("degree-4 node");
    if (deg == 3) trivalent.push_back(v);
  }
  if (trivalent.size() >= 2) throw UnclassifiableDiagram("two trivalent nodes");

  if (trivalent.empty()) {
    // Type A: walk the path from the smaller endpoint.
    out.type = SystemType{Family::A, d};
    int start = 0;
    for (int v : comp) {
      int deg = 0;
      for (int u : comp)
        if (u != v && sys.adjacent(u, v)) ++deg;
      if (deg <= 1 && (start == 0 || v < start)) start = v;
    }
    out.bourbaki_to_node = walk_branch(sys, comp, start, 0);
    return out;
  }

  const int c = trivalent[0];
  std::vector<std::vector<int>> branches;
  for (int v : comp)
    if (sys.adjacent(c, v)) branches.push_back(walk_branch(sys, comp, v, c));
  if (branches.size() != 3) throw UnclassifiableDiagram("trivalent bookkeeping");
  std::sort(branches.begin(), branches.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a[0] < b[0];
            });
  const size_t l1 = branches[0].size(), l2 = branches[1].size(), l3 = branches[2].size();

  if (l1 == 1 && l2 == 1) {
    // D_d: Bourbaki tail 1..(n-3) from the far end of the long branch,
    // then the center, then the two short leaves by node index.
    out.type = SystemType{Family::D, d};
    std::vector<int> tail = branches[2];
    std::reverse(tail.begin(), tail.end());
    out.bourbaki_to_node = tail;
    out.bourbaki_to_node.push_back(c);
    int u = branches[0][0], v = branches[1][0];
    out.bourbaki_to_node.push_back(std::min(u, v));
    out.bourbaki_to_node.push_back(std::max(u, v));
    return out;
  }
  if (l1 == 1 && l2 == 2 && (l3 >= 2 && l3 <= 4)) {
    // E_d: label 2 on the short branch, 3-1 toward the length-2 branch,
    // 5,6,... along the long branch.
    out.type = SystemType{Family::E, d};
    out.bourbaki_to_node.assign(size_t(d), 0);
    out.bourbaki_to_node[1] = branches[0][0];  // node 2
    out.bourbaki_to_node[3] = c;               // node 4
    out.bourbaki_to_node[2] = branches[1][0];  // node 3
    out.bourbaki_to_node[0] = branches[1][1];  // node 1
    for (size_t i = 0; i < l3; ++i) out.bourbaki_to_node[4 + i] = branches[2][i];
    validate_system_type(out.type);
    return out;
  }
  throw UnclassifiableDiagram("branch lengths do not match any ADE diagram");
}

}  // namespace

std::vector<DiagramComponent> subdiagram_components(const RootSystem& sys,
                                                    const std::set<int>& nodes) {
  for (int v : nodes)
    if (!sys.node_valid(v)) throw BadNodeIndex("subdiagram node out of range");
  std::vector<DiagramComponent> out;
  std::set<int> seen;
  for (int v : nodes) {
    if (seen.count(v)) continue;
    std::set<int> comp;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (!comp.insert(x).second) continue;
      for (int u : nodes)
        if (u != x && !comp.count(u) && sys.adjacent(x, u)) stack.push_back(u);
    }
    seen.insert(comp.begin(), comp.end());
    out.push_back(classify_component(sys, comp));
  }
  std::sort(out.begin(), out.end(),
            [](const DiagramComponent& a, const DiagramComponent& b) {
              return *std::min_element(a.bourbaki_to_node.begin(), a.bourbaki_to_node.end()) <
                     *std::min_element(b.bourbaki_to_node.begin(), b.bourbaki_to_node.end());
            });
  return out;
}

bool node_minuscule_in_component(const DiagramComponent& comp, int node) {
  int label = comp.bourbaki_label(node);
  auto table = minuscule_nodes_for(comp.type);
  return std::find(table.begin(), table.end(), label) != table.end();
}

}  // namespace minq
