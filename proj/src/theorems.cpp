#include "minq/theorems.hpp"

#include <algorithm>
#include <functional>

namespace minq {

ReflectionSubgroup stabilizer_weyl_of_point(const RootSystem& sys,
                                            const std::set<int>& ambient,
                                            const WeylElement& u,
                                            const std::set<int>& fixed_nodes) {
  ReflectionSubgroup out;
  out.ambient_nodes.assign(ambient.begin(), ambient.end());
  for (const RootVec& b : sys.positive_roots) {
    const std::set<int> supp = sys.root_support(b);
    if (!std::includes(ambient.begin(), ambient.end(), supp.begin(), supp.end())) continue;
    const std::set<int> isupp = sys.root_support(act_inverse(u, b));
    if (!std::includes(fixed_nodes.begin(), fixed_nodes.end(), isupp.begin(), isupp.end()))
      continue;
    out.positive_root_set.push_back(b);
  }
  std::sort(out.positive_root_set.begin(), out.positive_root_set.end());
  // These subgroups are parabolic-type intersections; their root sets must
  // be closed under root addition.
  for (size_t i = 0; i < out.positive_root_set.size(); ++i)
    for (size_t j = i + 1; j < out.positive_root_set.size(); ++j) {
      RootVec sum = out.positive_root_set[i];
      for (int t = 0; t < sys.rank; ++t) sum[size_t(t)] += out.positive_root_set[j][size_t(t)];
      if (!sys.is_root(sum)) continue;
      if (!std::binary_search(out.positive_root_set.begin(), out.positive_root_set.end(), sum))
        throw InternalError("stabilizer root set is not additively closed");
    }
  return out;
}

SimpleGenCache::SimpleGenCache(const RootSystem& sys, size_t element_cap)
    : sys_(&sys), cap_(element_cap) {
  for (const RootVec& b : sys.positive_roots)
    reflection_of_[root_reflection(sys, b).mat] = b;
}

const std::set<RootVec>& SimpleGenCache::reflections_generated_by(const std::set<int>& D) {
  const std::vector<int> key(D.begin(), D.end());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  std::vector<IntMat> gens;
  for (int d : D) gens.push_back(simple_reflection(*sys_, d).mat);
  std::set<IntMat> seen;
  std::vector<IntMat> queue{IntMat::ident(sys_->rank)};
  seen.insert(queue[0]);
  while (!queue.empty()) {
    IntMat cur = std::move(queue.back());
    queue.pop_back();
    for (const IntMat& g : gens) {
      IntMat next = mat_mul(cur, g);
      if (seen.size() >= cap_)
        throw InternalError("simple-generation closure exceeded the element cap");
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::set<RootVec> refs;
  for (const IntMat& m : seen) {
    auto r = reflection_of_.find(m);
    if (r != reflection_of_.end()) refs.insert(r->second);
  }
  return memo_.emplace(key, std::move(refs)).first->second;
}

WeylEqualityReport compute_weyl_stabilizers(const RootSystem& sys, const CosetContext& ctx,
                                            const WeylElement& w, const GenDecomposition& d,
                                            SimpleGenCache& cache) {
  if (d.m() == 0) throw DomainError("empty decomposition");
  const WeylElement& w1 = d.factors[0];
  const std::set<int> supp1 = support(sys, w1);

  std::set<int> upper1;
  for (int a : upper_index_set(sys, w1))
    if (supp1.count(a)) upper1.insert(a);

  std::set<int> I;
  for (int i = 1; i <= sys.rank; ++i)
    if (i != ctx.node) I.insert(i);

  WeylEqualityReport rep;
  rep.point_stab = stabilizer_weyl_of_point(sys, supp1, w1, upper1);
  rep.wx_stab = stabilizer_weyl_of_point(sys, supp1, w, I);
  rep.equal = rep.point_stab.positive_root_set == rep.wx_stab.positive_root_set;
  rep.inclusion_wx_in_point =
      std::includes(rep.point_stab.positive_root_set.begin(),
                    rep.point_stab.positive_root_set.end(),
                    rep.wx_stab.positive_root_set.begin(),
                    rep.wx_stab.positive_root_set.end());

  std::set<int> simples;
  for (const RootVec& b : rep.point_stab.positive_root_set)
    if (height(b) == 1)
      for (int i = 0; i < sys.rank; ++i)
        if (b[size_t(i)] == 1) simples.insert(i + 1);
  const std::set<RootVec>& generated = cache.reflections_generated_by(simples);
  rep.simple_generated = true;
  for (const RootVec& b : rep.point_stab.positive_root_set)
    if (!generated.count(b)) {
      rep.simple_generated = false;
      break;
    }
  return rep;
}

WeylEqualityReport verify_weyl_equality(const RootSystem& sys, const CosetContext& ctx,
                                        const WeylElement& w, const GenDecomposition& d,
                                        SimpleGenCache& cache) {
  if (sys.type.family == Family::E && !d.smooth)
    throw PreconditionViolated("type E requires a smooth decomposition");
  return compute_weyl_stabilizers(sys, ctx, w, d, cache);
}

RootInequalityReport root_inequality_check(const RootSystem& sys, const CosetContext& ctx,
                                           const WeylElement& w, const GenDecomposition& d) {
  (void)ctx;
  if (sys.type.family == Family::E && !d.smooth)
    throw PreconditionViolated("type E requires a smooth decomposition");
  if (d.m() == 0) throw DomainError("empty decomposition");
  const WeylElement& w1 = d.factors[0];

  RootInequalityReport rep;
  for (int i = 1; i <= sys.rank; ++i)
    if (is_left_descent(w1, i)) {
      if (rep.alpha_node != 0)
        throw NonUniqueDescent("first factor has more than one left descent");
      rep.alpha_node = i;
    }
  if (rep.alpha_node == 0) throw NonUniqueDescent("first factor has no left descent");

  rep.w1_inv_alpha = act_inverse(w1, sys.simple_root(rep.alpha_node));
  rep.w_inv_alpha = act_inverse(w, sys.simple_root(rep.alpha_node));
  rep.holds = root_leq(rep.w_inv_alpha, rep.w1_inv_alpha);
  rep.vectors_equal = rep.w1_inv_alpha == rep.w_inv_alpha;
  rep.m = d.m();
  rep.equality_iff_m1 = rep.vectors_equal == (rep.m == 1);
  return rep;
}

PeakIndexData type_a_normal_form(const CosetContext& ctx, const WeylElement& w) {
  const RootSystem& sys = *ctx.sys;
  if (sys.type.family != Family::A) throw WrongType("type A normal form");
  const int n = sys.rank, r = ctx.node;

  const std::vector<int> perm = as_permutation(sys, w);
  PeakIndexData out;
  for (int i = 1; i <= r; ++i) out.a_seq.push_back(perm[size_t(i) - 1] - 1);
  for (int i = 1; i <= r; ++i) {
    if (out.a_seq[size_t(i) - 1] < i)
      throw NotFullSupport("a_" + std::to_string(i) + " < " + std::to_string(i));
    if (i < r && out.a_seq[size_t(i) - 1] >= out.a_seq[size_t(i)])
      throw NotMinimalRep("a-sequence is not strictly increasing");
  }
  if (out.a_seq.back() != n) throw NotFullSupport("a_r < n");

  out.J.push_back(1);
  for (int j = 2; j <= r; ++j)
    if (out.a_seq[size_t(j) - 1] - out.a_seq[size_t(j) - 2] >= 2) out.J.push_back(j);
  out.standard_order = out.J;

  // The block word must agree with the canonical subexpression.
  Word block;
  for (int j = 1; j <= r; ++j)
    for (int l : type_a_descending_run(out.a_seq[size_t(j) - 1], j)) block.push_back(l);
  if (block != canonical_word(ctx, w))
    throw InternalError("type A block word differs from the canonical word");
  return out;
}

PeakIndexData type_d_normal_form(const CosetContext& ctx, const WeylElement& w) {
  const RootSystem& sys = *ctx.sys;
  const int n = sys.rank;
  if (sys.type.family != Family::D) throw WrongType("type D normal form");
  if (ctx.node != n && ctx.node != n - 1)
    throw WrongType("v-block normal form exists for the spinor nodes only");
  if (support(sys, w).size() != size_t(n)) throw NotFullSupport("Supp(w) != S");

  // Node n-1 reduces through the diagram automorphism swapping n-1 and n.
  Word word;
  if (ctx.node == n) {
    word = canonical_word(ctx, w);
  } else {
    Word mapped = reduced_word(sys, w);
    for (int& l : mapped) l = d_swap_letter(n, l);
    CosetContext ctx_n = make_coset_context(sys, n);
    word = canonical_word(ctx_n, from_word(sys, mapped));
  }

  // Split into v-blocks: every block ends with its single fork letter.
  std::vector<Word> segments(1);
  for (int l : word) {
    segments.back().push_back(l);
    if (l == n || l == n - 1) segments.emplace_back();
  }
  if (!segments.back().empty())
    throw InternalError("canonical word does not end with a fork letter");
  segments.pop_back();

  const int k = int(segments.size());
  PeakIndexData out;
  out.a_seq.assign(size_t(k), 0);
  for (int pos = 0; pos < k; ++pos) {
    const int i = k - pos;  // blocks appear in decreasing index order
    const Word& seg = segments[size_t(pos)];
    const int end = seg.back();
    if (end != ((i % 2) ? n : n - 1))
      throw InternalError("block parity mismatch in v-block parse");
    int a;
    if (seg.size() == 1) {
      a = end;
    } else {
      a = seg[0];
      Word expect = type_d_block(n, i, a);
      if (seg != expect) throw InternalError("malformed v-block in canonical word");
    }
    out.a_seq[size_t(i) - 1] = a;
  }
  for (int j = 1; j < k; ++j)
    if (out.a_seq[size_t(j) - 1] >= out.a_seq[size_t(j)])
      throw InternalError("v-block a-sequence is not strictly increasing");
  if (out.a_seq[0] != 1 || k < 2) throw NotFullSupport("full support requires a_1 = 1, k >= 2");

  out.J.clear();
  for (int j = 1; j <= k - 1; ++j)
    if (sys.cartan[size_t(out.a_seq[size_t(j)]) - 1][size_t(out.a_seq[size_t(j) - 1]) - 1] == 0)
      out.J.push_back(j);
  out.J.push_back(k);
  out.standard_order.assign(out.J.rbegin(), out.J.rend());
  return out;
}

namespace {

std::optional<int> match_simple(const RootSystem& sys, const WeylElement& v) {
  for (int j = 1; j <= sys.rank; ++j)
    if (v.mat == simple_reflection(sys, j).mat) return j;
  return std::nullopt;
}

Word runs_word(const std::vector<int>& a, const std::vector<int>& b) {
  Word out;
  for (size_t s = 0; s < a.size(); ++s)
    for (int l : type_a_descending_run(a[s], b[s])) out.push_back(l);
  return out;
}

// All strictly increasing a-sequences of length `len` with a[s] >= lo+s and
// a[s] <= n.
void each_increasing(int len, int lo, int n, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (int(cur.size()) == len) {
    fn(cur);
    return;
  }
  const int s = int(cur.size());
  int from = cur.empty() ? lo : cur.back() + 1;
  from = std::max(from, lo + s);
  for (int v = from; v <= n; ++v) {
    cur.push_back(v);
    each_increasing(len, lo, n, cur, fn);
    cur.pop_back();
  }
}

struct SlideCheck {
  const RootSystem& sys;
  LemmaReport& rep;
  // s_l w' = w' s_j with j != forbidden_right and s_j <= w'.
  void left(const WeylElement& wp, const std::set<int>& supp, int l, int forbidden_right,
            const std::string& tag) {
    ++rep.tuples;
    WeylElement v = mul(sys, inverse_of(wp), mul(sys, simple_reflection(sys, l), wp));
    auto j = match_simple(sys, v);
    if (!j || *j == forbidden_right || !supp.count(*j))
      rep.violations.push_back(tag + " l=" + std::to_string(l));
  }
  // w' s_t = s_l w' with l != forbidden_left and s_l <= w'.
  void right(const WeylElement& wp, const std::set<int>& supp, int t, int forbidden_left,
             const std::string& tag) {
    ++rep.tuples;
    WeylElement v = mul(sys, mul(sys, wp, simple_reflection(sys, t)), inverse_of(wp));
    auto l = match_simple(sys, v);
    if (!l || *l == forbidden_left || !supp.count(*l))
      rep.violations.push_back(tag + " t=" + std::to_string(t));
  }
};

template <typename Fn>
void each_a_tuple(const RootSystem& sysA, bool consecutive, Fn&& fn) {
  const int n = sysA.rank;
  for (int i = 1; i < n; ++i)
    for (int k = i + 1; k <= n; ++k) {
      const int len = k - i + 1;
      auto handle = [&](const std::vector<int>& a) {
        // b consecutive: b_s = b_i + (s - i), with s <= b_s <= a_s.
        int hi = a[0];
        for (int s = 0; s < len; ++s) hi = std::min(hi, a[size_t(s)] - s);
        for (int bi = i; bi <= hi; ++bi) {
          std::vector<int> b(static_cast<size_t>(len), 0);
          for (int s = 0; s < len; ++s) b[size_t(s)] = bi + s;
          fn(i, k, a, b);
        }
      };
      if (consecutive) {
        for (int ai = i; ai + len - 1 <= n; ++ai) {
          std::vector<int> a(static_cast<size_t>(len), 0);
          for (int s = 0; s < len; ++s) a[size_t(s)] = ai + s;
          handle(a);
        }
      } else {
        std::vector<int> cur;
        each_increasing(len, i, n, cur, handle);
      }
    }
}

}  // namespace

LemmaReport lemma_slide_left(const RootSystem& sysA) {
  LemmaReport rep;
  SlideCheck check{sysA, rep};
  each_a_tuple(sysA, false, [&](int i, int k, const std::vector<int>& a, const std::vector<int>& b) {
    const Word word = runs_word(a, b);
    const WeylElement wp = from_word(sysA, word);
    const std::set<int> supp(word.begin(), word.end());
    for (int l = b[0]; l <= a[0] - 1; ++l)
      check.left(wp, supp, l, b[size_t(k - i)],
                 "slide_left i=" + std::to_string(i) + " k=" + std::to_string(k));
  });
  return rep;
}

LemmaReport lemma_slide_left_full(const RootSystem& sysA) {
  LemmaReport rep;
  SlideCheck check{sysA, rep};
  each_a_tuple(sysA, true, [&](int i, int k, const std::vector<int>& a, const std::vector<int>& b) {
    const Word word = runs_word(a, b);
    const WeylElement wp = from_word(sysA, word);
    const std::set<int> supp(word.begin(), word.end());
    for (int l = b[0]; l <= a[size_t(k - i)]; ++l) {
      if (l == a[0]) continue;
      check.left(wp, supp, l, b[size_t(k - i)],
                 "slide_left_full i=" + std::to_string(i) + " k=" + std::to_string(k));
    }
  });
  return rep;
}

LemmaReport lemma_slide_right(const RootSystem& sysA) {
  LemmaReport rep;
  SlideCheck check{sysA, rep};
  each_a_tuple(sysA, true, [&](int i, int k, const std::vector<int>& a, const std::vector<int>& b) {
    const Word word = runs_word(a, b);
    const WeylElement wp = from_word(sysA, word);
    const std::set<int> supp(word.begin(), word.end());
    for (int t = b[size_t(k - i)] + 1; t <= a[size_t(k - i)]; ++t)
      check.right(wp, supp, t, a[0],
                  "slide_right i=" + std::to_string(i) + " k=" + std::to_string(k));
  });
  return rep;
}

LemmaReport lemma_slide_right_full(const RootSystem& sysA) {
  LemmaReport rep;
  SlideCheck check{sysA, rep};
  each_a_tuple(sysA, true, [&](int i, int k, const std::vector<int>& a, const std::vector<int>& b) {
    const Word word = runs_word(a, b);
    const WeylElement wp = from_word(sysA, word);
    const std::set<int> supp(word.begin(), word.end());
    for (int t = b[0]; t <= a[size_t(k - i)]; ++t) {
      if (t == b[size_t(k - i)]) continue;
      check.right(wp, supp, t, a[0],
                  "slide_right_full i=" + std::to_string(i) + " k=" + std::to_string(k));
    }
  });
  return rep;
}

LemmaReport lemma_block_shift_d(const RootSystem& sysD) {
  LemmaReport rep;
  const int n = sysD.rank;
  for (int l = 1; l <= n - 1; ++l) {
    const bool odd = (l % 2) != 0;
    for (int a = 1; a <= n - 2; ++a) {
      const WeylElement v = from_word(sysD, type_d_block(n, l, a));
      auto expect = [&](int i, int j, const char* tag) {
        ++rep.tuples;
        WeylElement lhs = mul(sysD, simple_reflection(sysD, i), v);
        WeylElement rhs = mul(sysD, v, simple_reflection(sysD, j));
        if (!(lhs == rhs))
          rep.violations.push_back(std::string(tag) + " l=" + std::to_string(l) +
                                   " a=" + std::to_string(a) + " i=" + std::to_string(i));
      };
      const int top = odd ? n - 2 : n - 1;
      for (int i = 1 + a; i <= top; ++i) expect(i, i - 1, "block_shift");
      if (odd) expect(n, n - 2, "block_shift_fork");
    }
  }
  return rep;
}

LemmaReport lemma_w0_blocks_d(const RootSystem& sysD) {
  LemmaReport rep;
  ++rep.tuples;
  const int n = sysD.rank;
  CosetContext ctx = make_coset_context(sysD, n);
  auto orbit = enumerate_minuscule(ctx);
  const MinusculeElement* longest = nullptr;
  for (const auto& e : orbit)
    if (!longest || e.w.len > longest->w.len) longest = &e;

  int total = 0;
  WeylElement prod = identity_element(sysD);
  std::vector<Word> blocks;
  // leading block: s_{n-1} for odd n, s_n for even n
  blocks.push_back(((n - 1) % 2) ? Word{n} : Word{n - 1});
  for (int i = n - 2; i >= 1; --i) blocks.push_back(type_d_block(n, i, i));
  for (const Word& blk : blocks) {
    WeylElement f = from_word(sysD, blk);
    if (f.len != int(blk.size())) {
      rep.violations.push_back("v-block is not reduced");
      return rep;
    }
    total += f.len;
    prod = mul(sysD, prod, f);
  }
  if (!(prod == longest->w) || total != longest->w.len ||
      longest->w.len != n * (n - 1) / 2)
    rep.violations.push_back("w_0^I block decomposition mismatch for D" + std::to_string(n));
  return rep;
}

CatalogResult classify_exceptional(const CosetContext& ctx) {
  const RootSystem& sys = *ctx.sys;
  if (sys.type.family != Family::E) throw WrongType("exceptional catalog requires type E");

  CatalogResult out;
  out.type = sys.type;
  out.node = ctx.node;
  auto orbit = enumerate_minuscule(ctx);
  out.orbit_size = int(orbit.size());

  for (const auto& e : orbit) {
    if (support(sys, e.w).size() != size_t(sys.rank)) continue;
    ++out.full_support;
    CatalogRow row;
    row.word = canonical_word(ctx, e.w);
    row.length = e.w.len;
    const QuiverW q = build_quiver(sys, row.word);
    row.peak_count = int(q.peaks.size());

    std::vector<int> ordering = q.peaks;
    do {
      OrderingResult res;
      res.ordering = ordering;
      GenDecomposition d = construction_one(sys, row.word, ordering);
      res.smooth = d.smooth;
      res.factor_words = d.factor_words;
      res.fibers = fiber_profile(sys, d);
      row.orderings.push_back(std::move(res));
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    row.standard_smooth = row.orderings[0].smooth;
    out.rows.push_back(std::move(row));
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const CatalogRow& a, const CatalogRow& b) {
    return a.length != b.length ? a.length < b.length : a.word < b.word;
  });
  return out;
}

}  // namespace minq
