#include "minq/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace minq {

Word parse_word(const RootSystem& sys, const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int v;
    try {
      size_t pos = 0;
      v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw BadNodeIndex("bad word letter '" + tok + "'");
    }
    if (!sys.node_valid(v))
      throw BadNodeIndex("letter " + std::to_string(v) + " out of range 1.." +
                         std::to_string(sys.rank));
    out.push_back(v);
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(w[i]);
  }
  return out;
}

IntMat IntMat::ident(int n) {
  IntMat m;
  m.n = n;
  m.a.assign(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  IntMat z;
  z.n = x.n;
  z.a.assign(size_t(x.n) * x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

RootVec mat_apply(const IntMat& m, const RootVec& v) {
  RootVec out(size_t(m.n), 0);
  for (int j = 0; j < m.n; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < m.n; ++i) out[i] += m.at(i, j) * v[j];
  }
  return out;
}

WeylElement identity_element(const RootSystem& sys) {
  WeylElement w;
  w.mat = IntMat::ident(sys.rank);
  w.inv = w.mat;
  w.len = 0;
  return w;
}

WeylElement simple_reflection(const RootSystem& sys, int node) {
  if (!sys.node_valid(node)) throw BadNodeIndex("simple reflection index");
  WeylElement w;
  w.mat = IntMat::ident(sys.rank);
  const int i = node - 1;
  for (int j = 0; j < sys.rank; ++j) w.mat.at(i, j) -= sys.cartan[i][j];
  w.inv = w.mat;
  w.len = 1;
  return w;
}

WeylElement root_reflection(const RootSystem& sys, const RootVec& beta) {
  if (!sys.is_root(beta)) throw NotARoot("root_reflection argument");
  WeylElement w;
  w.mat = IntMat::ident(sys.rank);
  for (int j = 0; j < sys.rank; ++j) {
    // <alpha_j, beta^vee> = sum_i beta_i C[i][j]
    int p = 0;
    for (int i = 0; i < sys.rank; ++i) p += beta[i] * sys.cartan[i][j];
    for (int r = 0; r < sys.rank; ++r) w.mat.at(r, j) -= p * beta[r];
  }
  w.inv = w.mat;
  w.len = inversion_count(sys, w.mat);
  return w;
}

int inversion_count(const RootSystem& sys, const IntMat& mat) {
  int count = 0;
  for (const RootVec& b : sys.positive_roots)
    if (vec_nonpos(mat_apply(mat, b))) ++count;
  return count;
}

WeylElement from_word(const RootSystem& sys, const Word& word) {
  IntMat m = IntMat::ident(sys.rank);
  IntMat mi = m;
  for (int c : word) {
    const IntMat s = simple_reflection(sys, c).mat;
    m = mat_mul(m, s);
    mi = mat_mul(s, mi);
  }
  WeylElement w;
  w.mat = std::move(m);
  w.inv = std::move(mi);
  w.len = inversion_count(sys, w.mat);
  return w;
}

WeylElement mul(const RootSystem& sys, const WeylElement& x, const WeylElement& y) {
  WeylElement z;
  z.mat = mat_mul(x.mat, y.mat);
  z.inv = mat_mul(y.inv, x.inv);
  z.len = inversion_count(sys, z.mat);
  return z;
}

WeylElement inverse_of(const WeylElement& w) {
  WeylElement z;
  z.mat = w.inv;
  z.inv = w.mat;
  z.len = w.len;
  return z;
}

RootVec act(const WeylElement& w, const RootVec& v) { return mat_apply(w.mat, v); }
RootVec act_inverse(const WeylElement& w, const RootVec& v) { return mat_apply(w.inv, v); }

bool is_identity(const WeylElement& w) { return w.mat == IntMat::ident(w.mat.n); }

namespace {
bool column_nonpos(const IntMat& m, int node) {
  for (int r = 0; r < m.n; ++r)
    if (m.at(r, node - 1) > 0) return false;
  return true;
}
}  // namespace

bool is_left_descent(const WeylElement& w, int node) { return column_nonpos(w.inv, node); }
bool is_right_descent(const WeylElement& w, int node) { return column_nonpos(w.mat, node); }

Word reduced_word(const RootSystem& sys, const WeylElement& w) {
  Word out;
  IntMat m = w.mat, mi = w.inv;
  for (;;) {
    int desc = 0;
    for (int i = 1; i <= sys.rank; ++i)
      if (column_nonpos(mi, i)) {
        desc = i;
        break;
      }
    if (desc == 0) break;
    const IntMat s = simple_reflection(sys, desc).mat;
    m = mat_mul(s, m);
    mi = mat_mul(mi, s);
    out.push_back(desc);
  }
  if (m != IntMat::ident(sys.rank))
    throw InternalError("descent stripping failed to reach the identity");
  return out;
}

std::set<int> support(const RootSystem& sys, const WeylElement& w) {
  Word word = reduced_word(sys, w);
  return std::set<int>(word.begin(), word.end());
}

std::set<int> upper_index_set(const RootSystem& sys, const WeylElement& w) {
  std::set<int> out;
  for (int i = 1; i <= sys.rank; ++i)
    if (!is_right_descent(w, i)) out.insert(i);
  return out;
}

std::set<int> stabilizer_index_set(const RootSystem& sys, const WeylElement& w) {
  const std::set<int> iw = upper_index_set(sys, w);
  std::set<int> out;
  for (int i = 1; i <= sys.rank; ++i) {
    if (is_left_descent(w, i)) {
      out.insert(i);
      continue;
    }
    // s_i w W_{I^w} = w W_{I^w} iff w^{-1}(alpha_i) lies in R_{I^w}.
    RootVec col(size_t(sys.rank));
    for (int r = 0; r < sys.rank; ++r) col[r] = w.inv.at(r, i - 1);
    bool inside = true;
    for (int r = 0; r < sys.rank && inside; ++r)
      if (col[r] != 0 && !iw.count(r + 1)) inside = false;
    if (inside) out.insert(i);
  }
  return out;
}

std::set<int> perp_set(const RootSystem& sys, const WeylElement& w) {
  std::set<int> out;
  for (int i = 1; i <= sys.rank; ++i) {
    const IntMat s = simple_reflection(sys, i).mat;
    if (mat_mul(s, w.mat) == mat_mul(w.mat, s)) out.insert(i);
  }
  return out;
}

bool in_quotient(const RootSystem&, const WeylElement& w, const std::set<int>& I) {
  for (int i : I)
    if (is_right_descent(w, i)) return false;
  return true;
}

std::vector<int> as_permutation(const RootSystem& sys, const WeylElement& w) {
  if (sys.type.family != Family::A)
    throw WrongType("permutation model is defined for type A only");
  const int n = sys.rank;
  Word word = reduced_word(sys, w);
  std::vector<int> perm(size_t(n) + 1);
  for (int x = 1; x <= n + 1; ++x) {
    int y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (y == *it)
        y = *it + 1;
      else if (y == *it + 1)
        y = *it;
    }
    perm[size_t(x) - 1] = y;
  }
  return perm;
}

Word type_a_descending_run(int a, int b) {
  Word out;
  for (int l = a; l >= b; --l) out.push_back(l);
  return out;
}

Word type_d_block(int n, int i, int a) {
  const bool odd = (i % 2) != 0;
  if (a == n) {
    if (!odd) throw DomainError("v_{i,n} requires odd i");
    return {n};
  }
  if (a == n - 1) {
    if (odd) throw DomainError("v_{i,n-1} requires even i");
    return {n - 1};
  }
  if (a < 1 || a > n - 2) throw DomainError("v_{i,a} requires 1 <= a <= n-2");
  Word out;
  for (int l = a; l <= n - 2; ++l) out.push_back(l);
  out.push_back(odd ? n : n - 1);
  return out;
}

int d_swap_letter(int n, int letter) {
  if (letter == n) return n - 1;
  if (letter == n - 1) return n;
  return letter;
}

int e6_swap_letter(int letter) {
  switch (letter) {
    case 1: return 6;
    case 6: return 1;
    case 3: return 5;
    case 5: return 3;
    default: return letter;
  }
}

namespace {

// Reduced words of the longest minimal coset representatives for the two
// exceptional minuscule quotients. The canonical subexpression extraction
// and the standard peak orderings are anchored to these.
const Word kBaseE6Node1 = {6, 5, 4, 3, 2, 4, 1, 3, 5, 4, 6, 5, 2, 4, 3, 1};
const Word kBaseE7Node7 = {7, 6, 5, 4, 2, 3, 1, 4, 5, 3, 4, 6, 5,
                           2, 4, 3, 7, 6, 5, 4, 1, 3, 2, 4, 5, 6, 7};

Word base_word_for(const RootSystem& sys, int node) {
  const int n = sys.rank;
  switch (sys.type.family) {
    case Family::A: {
      // Block form of w_0^I: a_i = n - r + i.
      Word out;
      for (int j = 1; j <= node; ++j)
        for (int l : type_a_descending_run(n - node + j, j)) out.push_back(l);
      return out;
    }
    case Family::D: {
      if (node == 1) {
        Word out;
        for (int l = 1; l <= n - 2; ++l) out.push_back(l);
        out.push_back(n);
        out.push_back(n - 1);
        for (int l = n - 2; l >= 1; --l) out.push_back(l);
        return out;
      }
      // v-block form of w_0^I for the spinor node n; node n-1 is the image
      // under the diagram automorphism swapping n-1 and n.
      Word out;
      for (int i = n - 1; i >= 1; --i) {
        int a = (i == n - 1) ? ((i % 2) ? n : n - 1) : i;
        for (int l : type_d_block(n, i, a)) out.push_back(l);
      }
      if (node == n - 1)
        for (int& l : out) l = d_swap_letter(n, l);
      return out;
    }
    case Family::E: {
      if (n == 6) {
        Word out = kBaseE6Node1;
        if (node == 6)
          for (int& l : out) l = e6_swap_letter(l);
        return out;
      }
      return kBaseE7Node7;
    }
  }
  throw InternalError("unreachable family");
}

}  // namespace

CosetContext make_coset_context(const RootSystem& sys, int node) {
  if (!sys.node_valid(node)) throw BadNodeIndex("coset context node");
  if (!sys.is_minuscule_node(node))
    throw NotMinusculeNode("node " + std::to_string(node) + " is not minuscule in " +
                           sys.type.name());
  CosetContext ctx;
  ctx.sys = &sys;
  ctx.node = node;
  ctx.minuscule_weight.assign(size_t(sys.rank), 0);
  ctx.minuscule_weight[size_t(node) - 1] = 1;
  ctx.w0I_word = base_word_for(sys, node);

  // Self-check: the base word is reduced, lands in W^I, and has the full
  // quotient length |R^+| - |R_I^+|.
  WeylElement u = from_word(sys, ctx.w0I_word);
  std::set<int> I;
  for (int i = 1; i <= sys.rank; ++i)
    if (i != node) I.insert(i);
  int interior = 0;
  for (const RootVec& b : sys.positive_roots)
    if (b[size_t(node) - 1] == 0) ++interior;
  const int expected = int(sys.positive_roots.size()) - interior;
  if (u.len != int(ctx.w0I_word.size()) || !in_quotient(sys, u, I) || u.len != expected)
    throw InternalError("base word for " + sys.type.name() + " node " +
                        std::to_string(node) + " is not a reduced word of w_0^I");
  return ctx;
}

std::vector<MinusculeElement> enumerate_minuscule(const CosetContext& ctx) {
  const RootSystem& sys = *ctx.sys;
  const int n = sys.rank;
  std::vector<MinusculeElement> out;
  std::map<std::vector<int>, int> seen;

  MinusculeElement start;
  start.w = identity_element(sys);
  start.weight = ctx.minuscule_weight;
  seen[start.weight] = 0;
  out.push_back(std::move(start));

  for (size_t head = 0; head < out.size(); ++head) {
    const std::vector<int> weight = out[head].weight;
    const Word word = out[head].bfs_word;
    for (int i = 1; i <= n; ++i) {
      const int ci = weight[size_t(i) - 1];
      if (ci < -1 || ci > 1)
        throw InternalError("orbit weight pairing outside {-1,0,1}");
      if (ci != 1) continue;
      // s_i steps the weight down by alpha_i.
      std::vector<int> next = weight;
      for (int j = 0; j < n; ++j) next[j] -= sys.cartan[j][i - 1];
      if (seen.count(next)) continue;
      seen[next] = int(out.size());
      MinusculeElement elt;
      elt.weight = std::move(next);
      elt.bfs_word.reserve(word.size() + 1);
      elt.bfs_word.push_back(i);
      elt.bfs_word.insert(elt.bfs_word.end(), word.begin(), word.end());
      elt.w = mul(sys, simple_reflection(sys, i), out[head].w);
      if (elt.w.len != int(elt.bfs_word.size()))
        throw InternalError("orbit BFS produced a non-reduced word");
      out.push_back(std::move(elt));
    }
  }
  return out;
}

Word right_greedy_subword(const RootSystem& sys, const Word& base, const WeylElement& w) {
  Word out;
  IntMat m = w.mat, mi = w.inv;
  for (auto it = base.rbegin(); it != base.rend(); ++it) {
    if (!column_nonpos(m, *it)) continue;
    const IntMat s = simple_reflection(sys, *it).mat;
    m = mat_mul(m, s);
    mi = mat_mul(s, mi);
    out.push_back(*it);
  }
  if (m != IntMat::ident(sys.rank))
    throw NotMinimalRep("element is not below the base word");
  std::reverse(out.begin(), out.end());
  return out;
}

Word canonical_word(const CosetContext& ctx, const WeylElement& w) {
  const RootSystem& sys = *ctx.sys;
  std::set<int> I;
  for (int i = 1; i <= sys.rank; ++i)
    if (i != ctx.node) I.insert(i);
  if (!in_quotient(sys, w, I))
    throw NotMinimalRep("element is not a minimal coset representative");
  Word word = right_greedy_subword(sys, ctx.w0I_word, w);
  if (int(word.size()) != w.len)
    throw InternalError("canonical subexpression is not reduced");
  return word;
}

}  // namespace minq
