#include "minq/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "minq/bruteforce.hpp"

namespace minq {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

std::string instance_id(const RootSystem& sys, int node, const Word& word,
                        const std::vector<int>& ordering) {
  return sys.type.name() + " node " + std::to_string(node) + " w=[" + format_word(word) +
         "] ordering=[" + format_word(ordering) + "]";
}

json vec_json(const RootVec& v) { return json(v); }

json fibers_json(const std::vector<std::pair<int, SystemType>>& fibers) {
  json arr = json::array();
  for (const auto& [len, t] : fibers) arr.push_back(json::array({len, t.name()}));
  return arr;
}

json instance_json(const RootSystem& sys, int node, const Word& word,
                   const std::vector<int>& ordering, const GenDecomposition& d,
                   const WeylEqualityReport* weyl, const RootInequalityReport* ineq) {
  json row;
  row["instance"] = {{"type", std::string(1, "ADE"[int(sys.type.family)])},
                     {"rank", sys.rank},
                     {"node", node},
                     {"word", format_word(word)},
                     {"ordering", ordering}};
  row["weyl_equality"] = weyl ? json(weyl->equal) : json();
  row["simple_generated"] = weyl ? json(weyl->simple_generated) : json();
  if (ineq) {
    row["root_inequality"] = {{"alpha", ineq->alpha_node},
                              {"w1_inv_alpha", vec_json(ineq->w1_inv_alpha)},
                              {"w_inv_alpha", vec_json(ineq->w_inv_alpha)},
                              {"holds", ineq->holds},
                              {"equality_iff_m1", ineq->equality_iff_m1}};
  } else {
    row["root_inequality"] = json();
  }
  row["smooth"] = d.smooth;
  row["fibers"] = fibers_json(fiber_profile(sys, d));
  return row;
}

// All full-support elements of the quotient, each with every peak ordering
// of the quiver of its canonical word. The first ordering is the standard
// one.
template <typename Fn>
void for_each_ordering_instance(const CosetContext& ctx, Fn&& fn) {
  const RootSystem& sys = *ctx.sys;
  for (const MinusculeElement& e : enumerate_minuscule(ctx)) {
    if (support(sys, e.w).size() != size_t(sys.rank)) continue;
    const Word word = canonical_word(ctx, e.w);
    const QuiverW q = build_quiver(sys, word);
    std::vector<int> ordering = q.peaks;
    do {
      GenDecomposition d = construction_one(sys, word, ordering);
      fn(e.w, word, ordering, d);
    } while (std::next_permutation(ordering.begin(), ordering.end()));
  }
}

// The JSON report omits timings so identical configurations yield
// byte-identical output.
void finalize(SuiteResult& res, const Timer& timer, json summary = json::object(),
              json rows = json()) {
  res.seconds = timer.seconds();
  res.report = {{"suite", res.name},
                {"pass", res.pass},
                {"instances", res.instances},
                {"failures", res.failures},
                {"summary", std::move(summary)}};
  if (!rows.is_null()) res.report["rows"] = std::move(rows);
}

}  // namespace

SuiteResult suite_weyl_equality_a(int max_rank, bool collect_rows) {
  Timer timer;
  SuiteResult res;
  res.name = "weyl-equality-A";
  json rows = json::array();
  for (int n = 1; n <= max_rank; ++n) {
    const RootSystem sys = build_root_system({Family::A, n});
    SimpleGenCache cache(sys);
    for (int r = 1; r <= n; ++r) {
      const CosetContext ctx = make_coset_context(sys, r);
      for_each_ordering_instance(ctx, [&](const WeylElement& w, const Word& word,
                                          const std::vector<int>& ordering,
                                          const GenDecomposition& d) {
        ++res.instances;
        WeylEqualityReport rep = verify_weyl_equality(sys, ctx, w, d, cache);
        if (!rep.equal)
          res.fail("equality fails: " + instance_id(sys, r, word, ordering));
        if (!rep.simple_generated)
          res.fail("simple generation fails: " + instance_id(sys, r, word, ordering));
        if (collect_rows) rows.push_back(instance_json(sys, r, word, ordering, d, &rep, nullptr));
      });
    }
  }
  finalize(res, timer, {{"max_rank", max_rank}}, collect_rows ? std::move(rows) : json());
  return res;
}

SuiteResult suite_weyl_equality_d(int max_rank, bool collect_rows) {
  Timer timer;
  SuiteResult res;
  res.name = "weyl-equality-D";
  json rows = json::array();
  long simple_generated = 0;
  for (int n = 4; n <= max_rank; ++n) {
    const RootSystem sys = build_root_system({Family::D, n});
    SimpleGenCache cache(sys);
    for (int r : {1, n - 1, n}) {
      const CosetContext ctx = make_coset_context(sys, r);
      for_each_ordering_instance(ctx, [&](const WeylElement& w, const Word& word,
                                          const std::vector<int>& ordering,
                                          const GenDecomposition& d) {
        ++res.instances;
        WeylEqualityReport rep = compute_weyl_stabilizers(sys, ctx, w, d, cache);
        if (!rep.equal)
          res.fail("equality fails: " + instance_id(sys, r, word, ordering));
        simple_generated += rep.simple_generated ? 1 : 0;
        if (collect_rows) rows.push_back(instance_json(sys, r, word, ordering, d, &rep, nullptr));
      });
    }
  }
  finalize(res, timer,
           {{"max_rank", max_rank}, {"simple_generated", simple_generated}},
           collect_rows ? std::move(rows) : json());
  return res;
}

SuiteResult suite_weyl_equality_e(bool collect_rows) {
  Timer timer;
  SuiteResult res;
  res.name = "weyl-equality-E";
  json rows = json::array();
  long unfiltered = 0, unfiltered_equal = 0;
  for (SystemType t : {SystemType{Family::E, 6}, SystemType{Family::E, 7}}) {
    const RootSystem sys = build_root_system(t);
    SimpleGenCache cache(sys);
    const int node = t.rank == 6 ? 1 : 7;
    const CosetContext ctx = make_coset_context(sys, node);
    for_each_ordering_instance(ctx, [&](const WeylElement& w, const Word& word,
                                        const std::vector<int>& ordering,
                                        const GenDecomposition& d) {
      WeylEqualityReport rep = compute_weyl_stabilizers(sys, ctx, w, d, cache);
      ++unfiltered;
      unfiltered_equal += rep.equal ? 1 : 0;
      if (!d.smooth) return;  // the theorem hypothesis
      ++res.instances;
      if (!rep.equal)
        res.fail("equality fails: " + instance_id(sys, node, word, ordering));
      if (!rep.simple_generated)
        res.fail("simple generation fails: " + instance_id(sys, node, word, ordering));
      if (collect_rows)
        rows.push_back(instance_json(sys, node, word, ordering, d, &rep, nullptr));
    });
  }
  finalize(res, timer,
           {{"smooth_instances", res.instances},
            {"all_instances", unfiltered},
            {"all_instances_equal", unfiltered_equal}},
           collect_rows ? std::move(rows) : json());
  return res;
}

SuiteResult suite_remark_d8(bool collect_rows) {
  Timer timer;
  SuiteResult res;
  res.name = "remark-d8";
  json rows = json::array();

  const RootSystem sys = build_root_system({Family::D, 8});
  SimpleGenCache cache(sys);
  const CosetContext ctx = make_coset_context(sys, 8);

  Word word;
  for (const Word& blk : {type_d_block(8, 3, 4), type_d_block(8, 2, 3), type_d_block(8, 1, 1)})
    word.insert(word.end(), blk.begin(), blk.end());
  const WeylElement w = from_word(sys, word);
  if (canonical_word(ctx, w) != word) {
    res.fail("canonical word differs from the v-block word");
    finalize(res, timer);
    return res;
  }

  const QuiverW q = build_quiver(sys, word);
  std::vector<int> ordering = q.peaks;
  bool standard = true;
  do {
    ++res.instances;
    GenDecomposition d = construction_one(sys, word, ordering);
    WeylEqualityReport rep = compute_weyl_stabilizers(sys, ctx, w, d, cache);
    RootInequalityReport ineq = root_inequality_check(sys, ctx, w, d);
    if (!rep.equal) res.fail("equality fails: " + instance_id(sys, 8, word, ordering));
    if (!ineq.holds || !ineq.equality_iff_m1)
      res.fail("root inequality fails: " + instance_id(sys, 8, word, ordering));
    if (standard) {
      const WeylElement w1_expected =
          from_word(sys, parse_word(sys, "4 5 6 8 3 4 5 6 7"));
      if (!(d.factors[0] == w1_expected)) res.fail("standard w_1 is not the two-block element");
      if (rep.simple_generated)
        res.fail("point stabilizer unexpectedly generated by simple reflections");
      RootVec beta(8, 0);
      beta[3] = beta[4] = beta[5] = beta[6] = 1;  // a4+a5+a6+a7
      if (!std::binary_search(rep.point_stab.positive_root_set.begin(),
                              rep.point_stab.positive_root_set.end(), beta))
        res.fail("a4+a5+a6+a7 missing from the point stabilizer");
    }
    if (collect_rows) rows.push_back(instance_json(sys, 8, word, ordering, d, &rep, &ineq));
    standard = false;
  } while (std::next_permutation(ordering.begin(), ordering.end()));

  finalize(res, timer, json::object(), collect_rows ? std::move(rows) : json());
  return res;
}

namespace {

SuiteResult catalog_suite(SystemType t, int node, const FixtureCatalog& fixture,
                          const char* name) {
  Timer timer;
  SuiteResult res;
  res.name = name;
  const RootSystem sys = build_root_system(t);
  const CosetContext ctx = make_coset_context(sys, node);
  const CatalogResult cat = classify_exceptional(ctx);
  res.instances = cat.full_support;
  for (const std::string& msg : compare_catalog(sys, cat, fixture)) res.fail(msg);
  finalize(res, timer,
           {{"orbit_size", cat.orbit_size}, {"full_support", cat.full_support}});
  res.report["catalog"] = catalog_to_json(sys, cat);
  return res;
}

}  // namespace

SuiteResult suite_catalog_e6() {
  return catalog_suite({Family::E, 6}, 1, fixture_e6(), "catalog-e6");
}

SuiteResult suite_catalog_e7() {
  return catalog_suite({Family::E, 7}, 7, fixture_e7(), "catalog-e7");
}

namespace {

RootVec interval_vec(int rank, int lo, int hi, int coeff = 1) {
  RootVec v(size_t(rank), 0);
  for (int l = lo; l <= hi; ++l)
    if (l >= 1 && l <= rank) v[size_t(l) - 1] += coeff;
  return v;
}

void negate(RootVec& v) {
  for (int& c : v) c = -c;
}

// Expected w_1^{-1}(alpha) and w^{-1}(alpha) for the standard decreasing
// ordering in the node-n quotient of D_n, by case on r = j_2 + 1. The
// formulas are written for even k; odd k swaps the fork coordinates.
RootVec expected_d_w1(int n, int k, int r, const std::vector<int>& a) {
  RootVec v;
  if (r == k) {
    v = interval_vec(n, a[size_t(r) - 1], n - 1);
    if (k % 2) {  // swap n-1 <-> n
      v[size_t(n) - 2] = 0;
      v[size_t(n) - 1] = 1;
    }
  } else if (r == k - 1) {
    v = interval_vec(n, a[size_t(r) - 1], n);
  } else {
    v = interval_vec(n, a[size_t(r) - 1], n - (k + 1 - r));
    for (int l = n - (k - r); l <= n - 2; ++l) v[size_t(l) - 1] += 2;
    v[size_t(n) - 2] += 1;
    v[size_t(n) - 1] += 1;
  }
  negate(v);
  return v;
}

RootVec expected_d_w(int n, int k, int r, const std::vector<int>& a) {
  RootVec v;
  if (r == k && r == 2) {
    v = interval_vec(n, a[1] - 1, n);
  } else {
    // When the leading block degenerates to the single letter s_n (odd k,
    // a_k = n) the single-coefficient range starts one node lower (checked
    // against direct computation on D5..D7).
    const int ak = a[size_t(k) - 1];
    const int lo = (k % 2 && ak == n) ? ak - k : ak - k + 1;
    v = interval_vec(n, lo, n - k);
    for (int l = n - k + 1; l <= n - 2; ++l) v[size_t(l) - 1] += 2;
    v[size_t(n) - 2] += 1;
    v[size_t(n) - 1] += 1;
  }
  negate(v);
  return v;
}

}  // namespace

SuiteResult suite_root_inequality(int max_rank_a, int max_rank_d, bool collect_rows) {
  Timer timer;
  SuiteResult res;
  res.name = "root-inequality";
  json rows = json::array();

  struct TypeAInstance {
    int n, r;
    Word word;
  };
  std::vector<TypeAInstance> multi_peak_a;

  auto run_ctx = [&](const RootSystem& sys, const CosetContext& ctx, bool smooth_only) {
    for_each_ordering_instance(ctx, [&](const WeylElement& w, const Word& word,
                                        const std::vector<int>& ordering,
                                        const GenDecomposition& d) {
      if (smooth_only && !d.smooth) return;
      ++res.instances;
      RootInequalityReport rep = root_inequality_check(sys, ctx, w, d);
      if (!rep.holds)
        res.fail("inequality fails: " + instance_id(sys, ctx.node, word, ordering));
      if (!rep.equality_iff_m1)
        res.fail("equality/m=1 mismatch: " + instance_id(sys, ctx.node, word, ordering));
      if (collect_rows)
        rows.push_back(instance_json(sys, ctx.node, word, ordering, d, nullptr, &rep));
    });
  };

  for (int n = 1; n <= max_rank_a; ++n) {
    const RootSystem sys = build_root_system({Family::A, n});
    for (int r = 1; r <= n; ++r) {
      const CosetContext ctx = make_coset_context(sys, r);
      run_ctx(sys, ctx, false);
      for (const MinusculeElement& e : enumerate_minuscule(ctx)) {
        if (support(sys, e.w).size() != size_t(n)) continue;
        const Word word = canonical_word(ctx, e.w);
        if (build_quiver(sys, word).peaks.size() >= 2)
          multi_peak_a.push_back({n, r, word});
      }
    }
  }
  for (int n = 4; n <= max_rank_d; ++n) {
    const RootSystem sys = build_root_system({Family::D, n});
    for (int r : {1, n - 1, n}) run_ctx(sys, make_coset_context(sys, r), false);
  }
  {
    const RootSystem sys = build_root_system({Family::D, 8});
    Word word;
    for (const Word& blk : {type_d_block(8, 3, 4), type_d_block(8, 2, 3), type_d_block(8, 1, 1)})
      word.insert(word.end(), blk.begin(), blk.end());
    const CosetContext ctx = make_coset_context(sys, 8);
    const WeylElement w = from_word(sys, word);
    const QuiverW q = build_quiver(sys, word);
    std::vector<int> ordering = q.peaks;
    do {
      ++res.instances;
      GenDecomposition d = construction_one(sys, word, ordering);
      RootInequalityReport rep = root_inequality_check(sys, ctx, w, d);
      if (!rep.holds || !rep.equality_iff_m1)
        res.fail("inequality fails: " + instance_id(sys, 8, word, ordering));
    } while (std::next_permutation(ordering.begin(), ordering.end()));
  }
  for (SystemType t : {SystemType{Family::E, 6}, SystemType{Family::E, 7}}) {
    const RootSystem sys = build_root_system(t);
    const int node = t.rank == 6 ? 1 : 7;
    run_ctx(sys, make_coset_context(sys, node), true);
  }

  // Closed forms for the standard ordering in type A:
  //   w_1^{-1}(alpha_{a_1}) = -(a_1 + ... + a_{a_{j_2-1}})
  //   w^{-1}(alpha_{a_1})   = -(a_1 + ... + a_{a_{j_2-1} + r + 1 - j_2}).
  std::mt19937 rng(20250810);
  long closed_form_checks = 0;
  if (!multi_peak_a.empty()) {
    for (int s = 0; s < 20; ++s) {
      const TypeAInstance& inst =
          multi_peak_a[std::uniform_int_distribution<size_t>(0, multi_peak_a.size() - 1)(rng)];
      const RootSystem sys = build_root_system({Family::A, inst.n});
      const CosetContext ctx = make_coset_context(sys, inst.r);
      const WeylElement w = from_word(sys, inst.word);
      const QuiverW q = build_quiver(sys, inst.word);
      GenDecomposition d = construction_one(sys, inst.word, q.peaks);
      RootInequalityReport rep = root_inequality_check(sys, ctx, w, d);
      PeakIndexData nf = type_a_normal_form(ctx, w);
      const int j2 = nf.J[1];
      const int edge = nf.a_seq[size_t(j2) - 2];
      RootVec w1_expect = interval_vec(inst.n, 1, edge);
      negate(w1_expect);
      RootVec w_expect = interval_vec(inst.n, 1, edge + inst.r + 1 - j2);
      negate(w_expect);
      ++closed_form_checks;
      ++res.instances;
      if (rep.alpha_node != nf.a_seq[0] || rep.w1_inv_alpha != w1_expect ||
          rep.w_inv_alpha != w_expect)
        res.fail("closed-form vectors differ: " + instance_id(sys, inst.r, inst.word, q.peaks));
    }
  }

  // Type-D case table for the standard decreasing ordering, node n.
  long case_table_checks = 0;
  for (int n = 4; n <= max_rank_d; ++n) {
    const RootSystem sys = build_root_system({Family::D, n});
    const CosetContext ctx = make_coset_context(sys, n);
    for (const MinusculeElement& e : enumerate_minuscule(ctx)) {
      if (support(sys, e.w).size() != size_t(n)) continue;
      PeakIndexData nf = type_d_normal_form(ctx, e.w);
      if (nf.J.size() < 2) continue;
      const int k = int(nf.a_seq.size());
      const int r = nf.standard_order[1] + 1;  // j_2 + 1
      const Word word = canonical_word(ctx, e.w);
      const QuiverW q = build_quiver(sys, word);
      GenDecomposition d = construction_one(sys, word, q.peaks);
      RootInequalityReport rep = root_inequality_check(sys, ctx, e.w, d);
      ++case_table_checks;
      ++res.instances;
      if (rep.alpha_node != nf.a_seq[size_t(k) - 1] ||
          rep.w1_inv_alpha != expected_d_w1(n, k, r, nf.a_seq) ||
          rep.w_inv_alpha != expected_d_w(n, k, r, nf.a_seq))
        res.fail("type D case table differs: " + instance_id(sys, n, word, q.peaks));
    }
  }

  finalize(res, timer,
           {{"closed_form_checks", closed_form_checks},
            {"case_table_checks", case_table_checks}},
           collect_rows ? std::move(rows) : json());
  return res;
}

SuiteResult suite_lemmas(int max_rank_a, int max_rank_d) {
  Timer timer;
  SuiteResult res;
  res.name = "lemmas";

  auto absorb = [&](const LemmaReport& rep, const std::string& what) {
    res.instances += rep.tuples;
    for (const std::string& v : rep.violations) res.fail(what + ": " + v);
  };

  for (int n = 2; n <= max_rank_a; ++n) {
    const RootSystem sys = build_root_system({Family::A, n});
    absorb(lemma_slide_left(sys), "A" + std::to_string(n));
    absorb(lemma_slide_left_full(sys), "A" + std::to_string(n));
    absorb(lemma_slide_right(sys), "A" + std::to_string(n));
    absorb(lemma_slide_right_full(sys), "A" + std::to_string(n));
  }
  for (int n = 4; n <= max_rank_d; ++n)
    absorb(lemma_block_shift_d(build_root_system({Family::D, n})), "D" + std::to_string(n));
  for (int n = 4; n <= 8; ++n)
    absorb(lemma_w0_blocks_d(build_root_system({Family::D, n})), "w0 blocks D" + std::to_string(n));

  // Simple-reflection transfer: every simple reflection fixing the
  // w_1-coset also fixes the w-coset, for every construction-1 instance.
  auto transfer = [&](const RootSystem& sys, const CosetContext& ctx) {
    SimpleGenCache cache(sys);
    for_each_ordering_instance(ctx, [&](const WeylElement& w, const Word& word,
                                        const std::vector<int>& ordering,
                                        const GenDecomposition& d) {
      ++res.instances;
      WeylEqualityReport rep = compute_weyl_stabilizers(sys, ctx, w, d, cache);
      for (const RootVec& b : rep.point_stab.positive_root_set) {
        if (height(b) != 1) continue;
        if (!std::binary_search(rep.wx_stab.positive_root_set.begin(),
                                rep.wx_stab.positive_root_set.end(), b))
          res.fail("simple reflection transfer fails: " +
                   instance_id(sys, ctx.node, word, ordering));
      }
    });
  };
  for (int n = 1; n <= max_rank_a; ++n) {
    const RootSystem sys = build_root_system({Family::A, n});
    for (int r = 1; r <= n; ++r) transfer(sys, make_coset_context(sys, r));
  }
  for (int n = 4; n <= max_rank_d; ++n) {
    const RootSystem sys = build_root_system({Family::D, n});
    for (int r : {1, n - 1, n}) transfer(sys, make_coset_context(sys, r));
  }
  for (SystemType t : {SystemType{Family::E, 6}, SystemType{Family::E, 7}}) {
    const RootSystem sys = build_root_system(t);
    transfer(sys, make_coset_context(sys, t.rank == 6 ? 1 : 7));
  }

  finalize(res, timer);
  return res;
}

SuiteResult suite_oracle_equivalence() {
  Timer timer;
  SuiteResult res;
  res.name = "oracle-equivalence";

  for (SystemType t : {SystemType{Family::A, 3}, SystemType{Family::A, 4},
                       SystemType{Family::D, 4}}) {
    const RootSystem sys = build_root_system(t);
    const std::vector<WeylElement> group = enumerate_group(sys);
    for (int node : sys.minuscule_nodes) {
      const CosetContext ctx = make_coset_context(sys, node);
      std::set<int> I;
      for (int i = 1; i <= sys.rank; ++i)
        if (i != node) I.insert(i);
      for_each_ordering_instance(ctx, [&](const WeylElement& w, const Word& word,
                                          const std::vector<int>& ordering,
                                          const GenDecomposition& d) {
        const WeylElement& w1 = d.factors[0];
        const std::set<int> supp1 = support(sys, w1);
        std::set<int> upper1;
        for (int a : upper_index_set(sys, w1))
          if (supp1.count(a)) upper1.insert(a);

        struct Case {
          const WeylElement* u;
          const std::set<int>* fixed;
        };
        for (const Case& c : {Case{&w1, &upper1}, Case{&w, &I}}) {
          ++res.instances;
          ReflectionSubgroup rs = stabilizer_weyl_of_point(sys, supp1, *c.u, *c.fixed);
          std::vector<WeylElement> gens;
          for (const RootVec& b : rs.positive_root_set)
            gens.push_back(root_reflection(sys, b));
          std::vector<WeylElement> generated = generate_subgroup(sys, gens);
          std::vector<WeylElement> brute =
              brute_force_coset_stabilizer(sys, group, supp1, *c.u, *c.fixed);
          if (!same_element_set(generated, brute))
            res.fail("oracle mismatch: " + instance_id(sys, node, word, ordering));
        }
      });
    }
  }
  finalize(res, timer);
  return res;
}

SuiteResult suite_quiver_invariance(int pairs_per_type) {
  Timer timer;
  SuiteResult res;
  res.name = "quiver-invariance";

  struct Target {
    SystemType type;
    std::vector<int> nodes;
  };
  const std::vector<Target> targets = {{{Family::A, 4}, {1, 2, 3, 4}},
                                       {{Family::D, 4}, {1, 3, 4}},
                                       {{Family::E, 6}, {1}}};
  std::mt19937 rng(625);
  for (const Target& target : targets) {
    const RootSystem sys = build_root_system(target.type);
    // Pool of words of length >= 2 across the minuscule quotients.
    std::vector<Word> pool;
    for (int node : target.nodes) {
      const CosetContext ctx = make_coset_context(sys, node);
      for (const MinusculeElement& e : enumerate_minuscule(ctx))
        if (e.w.len >= 2) pool.push_back(canonical_word(ctx, e.w));
    }
    if (pool.empty()) {
      res.fail(target.type.name() + ": empty sample pool");
      continue;
    }
    for (int s = 0; s < pairs_per_type; ++s) {
      const Word& word = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
      // Random walk of admissible commutation swaps, tracking the vertex
      // bijection from the original word.
      Word other = word;
      std::vector<int> where(word.size());  // where[i] = position of original vertex i+1
      for (size_t i = 0; i < word.size(); ++i) where[i] = int(i);
      const int moves = std::uniform_int_distribution<int>(1, int(word.size()))(rng);
      for (int mv = 0; mv < moves; ++mv) {
        std::vector<size_t> spots;
        for (size_t p = 0; p + 1 < other.size(); ++p)
          if (sys.cartan[size_t(other[p]) - 1][size_t(other[p + 1]) - 1] == 0)
            spots.push_back(p);
        if (spots.empty()) break;
        const size_t p = spots[std::uniform_int_distribution<size_t>(0, spots.size() - 1)(rng)];
        std::swap(other[p], other[p + 1]);
        for (int& pos : where)
          if (pos == int(p))
            pos = int(p) + 1;
          else if (pos == int(p) + 1)
            pos = int(p);
      }
      ++res.instances;
      const QuiverW q1 = build_quiver(sys, word);
      const QuiverW q2 = build_quiver(sys, other);
      bool ok = true;
      for (int i = 1; i <= q1.k && ok; ++i)
        if (q2.colors[size_t(where[size_t(i) - 1])] != q1.colors[size_t(i) - 1]) ok = false;
      std::vector<std::pair<int, int>> mapped;
      for (auto [i, j] : q1.arrows)
        mapped.emplace_back(where[size_t(i) - 1] + 1, where[size_t(j) - 1] + 1);
      std::sort(mapped.begin(), mapped.end());
      if (mapped != q2.arrows) ok = false;
      if (!ok)
        res.fail(target.type.name() + ": quiver not invariant for [" + format_word(word) +
                 "] vs [" + format_word(other) + "]");
    }
  }
  finalize(res, timer, {{"pairs_per_type", pairs_per_type}});
  return res;
}

std::vector<std::string> suite_names() {
  return {"weyl-equality",  "remark-d8",        "catalog-e6",
          "catalog-e7",     "root-inequality",  "lemmas",
          "oracle-equivalence", "quiver-invariance", "all"};
}

std::vector<SuiteResult> run_suites(const std::string& name, int max_rank_a, int max_rank_d,
                                    bool collect_rows) {
  std::vector<SuiteResult> out;
  const bool all = name == "all";
  bool known = all;
  if (all || name == "weyl-equality") {
    out.push_back(suite_weyl_equality_a(max_rank_a, collect_rows));
    out.push_back(suite_weyl_equality_d(max_rank_d, collect_rows));
    out.push_back(suite_weyl_equality_e(collect_rows));
    known = true;
  }
  if (all || name == "remark-d8") {
    out.push_back(suite_remark_d8(collect_rows));
    known = true;
  }
  if (all || name == "catalog-e6") {
    out.push_back(suite_catalog_e6());
    known = true;
  }
  if (all || name == "catalog-e7") {
    out.push_back(suite_catalog_e7());
    known = true;
  }
  if (all || name == "root-inequality") {
    out.push_back(suite_root_inequality(max_rank_a, max_rank_d, collect_rows));
    known = true;
  }
  if (all || name == "lemmas") {
    out.push_back(suite_lemmas(max_rank_a, max_rank_d));
    known = true;
  }
  if (all || name == "oracle-equivalence") {
    out.push_back(suite_oracle_equivalence());
    known = true;
  }
  if (all || name == "quiver-invariance") {
    out.push_back(suite_quiver_invariance());
    known = true;
  }
  if (!known) throw DomainError("unknown suite '" + name + "'");
  return out;
}

json catalog_to_json(const RootSystem& sys, const CatalogResult& cat) {
  (void)sys;
  json rows = json::array();
  for (const CatalogRow& row : cat.rows) {
    json orderings = json::array();
    for (const OrderingResult& o : row.orderings) {
      json factors = json::array();
      for (const Word& fw : o.factor_words) factors.push_back(format_word(fw));
      orderings.push_back({{"ordering", o.ordering},
                           {"smooth", o.smooth},
                           {"factors", factors},
                           {"fibers", fibers_json(o.fibers)}});
    }
    rows.push_back({{"word", format_word(row.word)},
                    {"length", row.length},
                    {"peaks", row.peak_count},
                    {"standard_smooth", row.standard_smooth},
                    {"orderings", orderings}});
  }
  return {{"type", cat.type.name()},
          {"node", cat.node},
          {"orbit_size", cat.orbit_size},
          {"full_support", cat.full_support},
          {"elements", rows}};
}

json quiver_to_json(const QuiverW& q) {
  json arrows = json::array();
  for (auto [i, j] : q.arrows) arrows.push_back(json::array({i, j}));
  return {{"word", format_word(q.source_word)},
          {"vertices", q.k},
          {"colors", q.colors},
          {"arrows", arrows},
          {"peaks", q.peaks}};
}

json decomposition_to_json(const RootSystem& sys, const GenDecomposition& d) {
  json factors = json::array();
  const auto fibers = fiber_profile(sys, d);
  for (int i = 0; i < d.m(); ++i)
    factors.push_back({{"word", format_word(d.factor_words[size_t(i)])},
                       {"length", d.factors[size_t(i)].len},
                       {"peak_color", d.peak_colors[size_t(i)]},
                       {"support_type", fibers[size_t(i)].second.name()}});
  return {{"word", format_word(d.source_word)},
          {"ordering", d.peak_order},
          {"good", d.good},
          {"smooth", d.smooth},
          {"factors", factors},
          {"fibers", fibers_json(fibers)}};
}

}  // namespace minq
