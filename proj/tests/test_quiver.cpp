#include "doctest.h"
#include "minq/quiver.hpp"
#include "minq/suites.hpp"

using namespace minq;

TEST_CASE("successor and predecessor") {
  RootSystem a2 = build_root_system({Family::A, 2});
  QuiverW q = build_quiver(a2, {1, 2, 1});
  CHECK(successor(q, 1) == 3);
  CHECK(predecessor(q, 3) == 1);
  CHECK_FALSE(successor(q, 2).has_value());
  CHECK_THROWS_AS(successor(q, 4), VertexOutOfRange);
  CHECK_THROWS_AS(predecessor(q, 0), VertexOutOfRange);

  RootSystem e6 = build_root_system({Family::E, 6});
  QuiverW q6 = build_quiver(e6, {6, 5, 2, 4, 3, 1});
  for (int i = 1; i <= 6; ++i) CHECK_FALSE(successor(q6, i).has_value());

  CosetContext ctx = make_coset_context(e6, 1);
  QuiverW qw0 = build_quiver(e6, ctx.w0I_word);
  CHECK(successor(qw0, 3) == 6);  // the first alpha_4 vertex
}

TEST_CASE("build_quiver arrows and peaks") {
  RootSystem a2 = build_root_system({Family::A, 2});
  QuiverW q1 = build_quiver(a2, {1});
  CHECK(q1.k == 1);
  CHECK(q1.arrows.empty());
  CHECK(q1.peaks == std::vector<int>{1});

  QuiverW q = build_quiver(a2, {1, 2, 1});
  CHECK(q.arrows == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(q.peaks == std::vector<int>{1});

  CHECK_THROWS_AS(build_quiver(a2, {1, 1}), NonReducedWord);
  CHECK_THROWS_AS(build_quiver(a2, {1, 2, 1, 2}), NonReducedWord);

  RootSystem e6 = build_root_system({Family::E, 6});
  CHECK(build_quiver(e6, {6, 5, 2, 4, 3, 1}).peaks == std::vector<int>{1, 3});

  RootSystem e7 = build_root_system({Family::E, 7});
  Word three = parse_word(e7, "5 2 4 3 7 6 5 4 1 3 2 4 5 6 7");
  CHECK(build_quiver(e7, three).peaks.size() == 3);
}

TEST_CASE("subquiver Q_w(A)") {
  RootSystem e6 = build_root_system({Family::E, 6});
  QuiverW q = build_quiver(e6, {6, 5, 2, 4, 3, 1});
  CHECK(subquiver_QA(q, q.peaks).size() == 6);
  CHECK(subquiver_QA(q, {}).empty());
  CHECK(subquiver_QA(q, {1}) == std::vector<int>{1, 2});
  CHECK(subquiver_QA(q, {3}) == std::vector<int>{3});
  CHECK_THROWS_AS(subquiver_QA(q, {2}), NotAPeak);
}

TEST_CASE("construction 1 on the exceptional showcase words") {
  RootSystem e6 = build_root_system({Family::E, 6});
  Word w = parse_word(e6, "6 5 2 4 3 1");

  GenDecomposition std_d = construction_one(e6, w, {1, 3});
  CHECK(std_d.factor_words == std::vector<Word>{{6, 5}, {2, 4, 3, 1}});
  CHECK(std_d.good);
  CHECK(std_d.smooth);

  GenDecomposition alt = construction_one(e6, w, {3, 1});
  CHECK(alt.factor_words == std::vector<Word>{{2}, {6, 5, 4, 3, 1}});
  CHECK(alt.smooth);

  CHECK_THROWS_AS(construction_one(e6, w, {1, 2}), BadPeakOrder);
  CHECK_THROWS_AS(construction_one(e6, w, {1}), BadPeakOrder);

  // single peak: the decomposition is (w)
  Word chain = parse_word(e6, "4 3 1");
  GenDecomposition single = construction_one(e6, chain, build_quiver(e6, chain).peaks);
  CHECK(single.m() == 1);
  CHECK(single.factor_words[0] == chain);

  RootSystem e7 = build_root_system({Family::E, 7});
  Word three = parse_word(e7, "5 2 4 3 7 6 5 4 1 3 2 4 5 6 7");
  QuiverW q3 = build_quiver(e7, three);
  GenDecomposition d3 = construction_one(e7, three, q3.peaks);
  CHECK(d3.factor_words ==
        std::vector<Word>{{5}, {2, 4, 3, 1}, {7, 6, 5, 4, 3, 2, 4, 5, 6, 7}});
  CHECK(d3.smooth);
}

TEST_CASE("partition and single-peak properties over small quotients") {
  for (SystemType t : {SystemType{Family::A, 4}, SystemType{Family::D, 4}}) {
    RootSystem sys = build_root_system(t);
    for (int node : sys.minuscule_nodes) {
      CosetContext ctx = make_coset_context(sys, node);
      for (const MinusculeElement& e : enumerate_minuscule(ctx)) {
        if (e.w.len == 0) continue;
        Word word = canonical_word(ctx, e.w);
        QuiverW q = build_quiver(sys, word);
        std::vector<int> ordering = q.peaks;
        do {
          GenDecomposition d = construction_one(sys, word, ordering);
          CHECK(d.good);
          // partition: factor word lengths add up to l(w)
          size_t total = 0;
          for (const Word& fw : d.factor_words) total += fw.size();
          CHECK(total == word.size());
          // single peak per factor with the expected color
          for (int j = 0; j < d.m(); ++j) {
            QuiverW fq = build_quiver(sys, d.factor_words[size_t(j)]);
            REQUIRE(fq.peaks.size() == 1);
            CHECK(fq.colors[size_t(fq.peaks[0]) - 1] == d.peak_colors[size_t(j)]);
          }
          // unique left descent of the first factor
          int descents = 0;
          for (int i = 1; i <= sys.rank; ++i)
            descents += is_left_descent(d.factors[0], i) ? 1 : 0;
          CHECK(descents == 1);
        } while (std::next_permutation(ordering.begin(), ordering.end()));
      }
    }
  }
}

TEST_CASE("block commutation across a skipped peak prefix") {
  // When the first chosen peak is the q-th in standard order, the first
  // factor commutes letterwise with all earlier standard factors.
  RootSystem e7 = build_root_system({Family::E, 7});
  Word word = parse_word(e7, "5 2 4 3 7 6 5 4 1 3 2 4 5 6 7");
  QuiverW q = build_quiver(e7, word);
  GenDecomposition std_d = construction_one(e7, word, q.peaks);
  std::vector<int> ordering = q.peaks;
  do {
    GenDecomposition d = construction_one(e7, word, ordering);
    int qpos = 0;
    for (size_t t = 0; t < q.peaks.size(); ++t)
      if (q.peaks[t] == ordering[0]) qpos = int(t);  // 0-based position in standard order
    const std::set<int> first_supp = support(e7, d.factors[0]);
    for (int r = 0; r < qpos; ++r) {
      for (int e : first_supp)
        for (int f : support(e7, std_d.factors[size_t(r)]))
          CHECK(e7.cartan[size_t(e) - 1][size_t(f) - 1] == 0);
    }
  } while (std::next_permutation(ordering.begin(), ordering.end()));
}

TEST_CASE("hand-built decompositions are validated") {
  RootSystem a2 = build_root_system({Family::A, 2});
  CHECK_THROWS_AS(make_gen_decomposition(a2, {{2}, {2, 1}}), DomainError);

  RootSystem a3 = build_root_system({Family::A, 3});
  GenDecomposition d = make_gen_decomposition(a3, {{1}, {3}});
  CHECK(d.smooth);       // single reflections are always minuscule
  CHECK_FALSE(d.good);   // the product s1 s3 is not a minuscule element
}

TEST_CASE("is_smooth on showcase decompositions") {
  RootSystem e6 = build_root_system({Family::E, 6});
  GenDecomposition bad = make_gen_decomposition(
      e6, {parse_word(e6, "6"), parse_word(e6, "4 5 2 4 3 1")});
  CHECK_FALSE(is_smooth(e6, bad));
  GenDecomposition good = make_gen_decomposition(
      e6, {parse_word(e6, "6"), parse_word(e6, "1 3 4 5 2 4 3 1")});
  CHECK(is_smooth(e6, good));
}

TEST_CASE("fiber profiles") {
  RootSystem e6 = build_root_system({Family::E, 6});
  GenDecomposition d =
      construction_one(e6, parse_word(e6, "6 5 2 4 3 1"), {1, 3});
  auto fibers = fiber_profile(e6, d);
  REQUIRE(fibers.size() == 2);
  CHECK(fibers[0] == std::pair<int, SystemType>{2, {Family::A, 2}});
  CHECK(fibers[1] == std::pair<int, SystemType>{4, {Family::A, 4}});

  GenDecomposition q8 = make_gen_decomposition(
      e6, {parse_word(e6, "6"), parse_word(e6, "1 3 4 5 2 4 3 1")});
  auto f2 = fiber_profile(e6, q8);
  CHECK(f2[0] == std::pair<int, SystemType>{1, {Family::A, 1}});
  CHECK(f2[1] == std::pair<int, SystemType>{8, {Family::D, 5}});

  RootSystem e7 = build_root_system({Family::E, 7});
  GenDecomposition q10 = make_gen_decomposition(
      e7, {parse_word(e7, "1"), parse_word(e7, "7 6 5 4 3 2 4 5 6 7")});
  auto f3 = fiber_profile(e7, q10);
  CHECK(f3[0] == std::pair<int, SystemType>{1, {Family::A, 1}});
  CHECK(f3[1] == std::pair<int, SystemType>{10, {Family::D, 6}});
}

TEST_CASE("dot export is deterministic and marks peaks") {
  RootSystem e6 = build_root_system({Family::E, 6});
  QuiverW q = build_quiver(e6, {6, 5, 2, 4, 3, 1});
  std::string dot = to_dot(q);
  CHECK(dot == to_dot(q));
  CHECK(dot.find("v1 [label=\"v1:α6\", shape=doublecircle]") != std::string::npos);
  CHECK(dot.find("v2 [label=\"v2:α5\", shape=circle]") != std::string::npos);
  CHECK(dot.find("v1 -> v2;") != std::string::npos);
}

TEST_CASE("quiver invariance under commutation moves (sampled)") {
  SuiteResult res = suite_quiver_invariance(15);
  CHECK(res.pass);
  CHECK(res.instances == 45);
}
