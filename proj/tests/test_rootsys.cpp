#include "doctest.h"
#include "minq/rootsys.hpp"

using namespace minq;

namespace {
RootVec rv(std::initializer_list<int> v) { return RootVec(v); }
}  // namespace

TEST_CASE("system type validation") {
  CHECK_THROWS_AS(validate_system_type({Family::A, 0}), InvalidRank);
  CHECK_THROWS_AS(validate_system_type({Family::D, 3}), InvalidRank);
  CHECK_THROWS_AS(validate_system_type({Family::E, 5}), InvalidRank);
  CHECK_THROWS_AS(validate_system_type({Family::E, 9}), InvalidRank);
  CHECK_NOTHROW(validate_system_type({Family::A, 1}));
  CHECK(parse_system_type("E6", 0).rank == 6);
  CHECK(parse_system_type("D", 5).family == Family::D);
  CHECK(parse_system_type("a4", 0).name() == "A4");
}

TEST_CASE("positive root counts and minuscule tables") {
  CHECK(build_root_system({Family::A, 2}).positive_roots.size() == 3);
  for (int n = 1; n <= 7; ++n)
    CHECK(build_root_system({Family::A, n}).positive_roots.size() == size_t(n * (n + 1) / 2));
  CHECK(build_root_system({Family::D, 4}).positive_roots.size() == 12);
  CHECK(build_root_system({Family::D, 5}).positive_roots.size() == 20);
  CHECK(build_root_system({Family::E, 6}).positive_roots.size() == 36);
  CHECK(build_root_system({Family::E, 7}).positive_roots.size() == 63);
  CHECK(build_root_system({Family::E, 8}).positive_roots.size() == 120);

  CHECK(build_root_system({Family::A, 4}).minuscule_nodes == std::vector<int>{1, 2, 3, 4});
  CHECK(build_root_system({Family::D, 4}).minuscule_nodes == std::vector<int>{1, 3, 4});
  CHECK(build_root_system({Family::E, 6}).minuscule_nodes == std::vector<int>{1, 6});
  CHECK(build_root_system({Family::E, 7}).minuscule_nodes == std::vector<int>{7});
  CHECK(build_root_system({Family::E, 8}).minuscule_nodes.empty());
}

TEST_CASE("A2 roots explicitly") {
  RootSystem sys = build_root_system({Family::A, 2});
  REQUIRE(sys.positive_roots.size() == 3);
  CHECK(sys.positive_roots[0] == rv({0, 1}));
  CHECK(sys.positive_roots[1] == rv({1, 0}));
  CHECK(sys.positive_roots[2] == rv({1, 1}));
  CHECK(sys.is_root(rv({-1, -1})));
  CHECK_FALSE(sys.is_root(rv({1, -1})));
  CHECK_FALSE(sys.is_root(rv({2, 1})));
}

TEST_CASE("cartan matrix shape") {
  for (SystemType t : {SystemType{Family::A, 5}, SystemType{Family::D, 6},
                       SystemType{Family::E, 7}}) {
    RootSystem sys = build_root_system(t);
    for (int i = 0; i < sys.rank; ++i) {
      CHECK(sys.cartan[i][i] == 2);
      for (int j = 0; j < sys.rank; ++j) {
        CHECK(sys.cartan[i][j] == sys.cartan[j][i]);
        if (i != j) CHECK((sys.cartan[i][j] == 0 || sys.cartan[i][j] == -1));
      }
    }
  }
}

TEST_CASE("pairing") {
  RootSystem a2 = build_root_system({Family::A, 2});
  CHECK(a2.pairing(a2.simple_root(1), a2.simple_root(1)) == 2);
  CHECK(a2.pairing(a2.simple_root(1), a2.simple_root(2)) == -1);

  RootSystem e6 = build_root_system({Family::E, 6});
  CHECK(e6.pairing(e6.simple_root(4), e6.simple_root(2)) == -1);
  CHECK(e6.pairing(e6.simple_root(2), e6.simple_root(3)) == 0);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      CHECK(e6.pairing(e6.simple_root(i), e6.simple_root(j)) == e6.cartan[i - 1][j - 1]);
  CHECK_THROWS_AS(e6.pairing(rv({1, 1, 0, 0, 0, 0}), e6.simple_root(1)), NotARoot);
}

TEST_CASE("root_leq") {
  CHECK(root_leq(rv({1, 0}), rv({1, 1})));
  CHECK_FALSE(root_leq(rv({1, 0}), rv({0, 1})));
  CHECK(root_leq(rv({-1, -1, -1}), rv({-1, -1, 0})));

  // partial order on all roots of A3
  RootSystem a3 = build_root_system({Family::A, 3});
  std::vector<RootVec> all;
  for (const RootVec& b : a3.positive_roots) {
    all.push_back(b);
    RootVec neg = b;
    for (int& c : neg) c = -c;
    all.push_back(neg);
  }
  for (const auto& x : all) {
    CHECK(root_leq(x, x));
    for (const auto& y : all) {
      if (root_leq(x, y) && root_leq(y, x)) CHECK(x == y);
      for (const auto& z : all)
        if (root_leq(x, y) && root_leq(y, z)) CHECK(root_leq(x, z));
    }
  }
}

TEST_CASE("root closure is closed under addition") {
  RootSystem sys = build_root_system({Family::D, 4});
  for (const RootVec& a : sys.positive_roots)
    for (const RootVec& b : sys.positive_roots) {
      RootVec sum = a;
      for (int i = 0; i < sys.rank; ++i) sum[size_t(i)] += b[size_t(i)];
      if (sys.is_root(sum)) {
        CHECK(vec_nonneg(sum));
        CHECK(sys.positive_root_index(sum) >= 0);
      }
    }
}

TEST_CASE("subdiagram classification") {
  RootSystem e6 = build_root_system({Family::E, 6});
  RootSystem e7 = build_root_system({Family::E, 7});

  auto comps = subdiagram_components(e6, {1, 3, 4, 5, 6});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == SystemType{Family::A, 5});

  comps = subdiagram_components(e7, {2, 3, 4, 5, 6, 7});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == SystemType{Family::D, 6});

  comps = subdiagram_components(e6, {1, 2, 3, 4, 5});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == SystemType{Family::D, 5});
  // Bourbaki relabeling of the D5 inside E6: tail 1-3-4, fork {2,5}.
  CHECK(comps[0].bourbaki_to_node == std::vector<int>{1, 3, 4, 2, 5});
  CHECK(node_minuscule_in_component(comps[0], 1));
  CHECK_FALSE(node_minuscule_in_component(comps[0], 4));
  CHECK_FALSE(node_minuscule_in_component(comps[0], 3));
  CHECK(node_minuscule_in_component(comps[0], 2));
  CHECK(node_minuscule_in_component(comps[0], 5));

  comps = subdiagram_components(e6, {1, 4});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].type == SystemType{Family::A, 1});
  CHECK(comps[1].type == SystemType{Family::A, 1});

  comps = subdiagram_components(e7, {1, 2, 3, 4, 5, 6, 7});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == SystemType{Family::E, 7});

  RootSystem e8 = build_root_system({Family::E, 8});
  comps = subdiagram_components(e8, {1, 2, 3, 4, 5, 6, 7, 8});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == SystemType{Family::E, 8});

  CHECK_THROWS_AS(subdiagram_components(e6, {0, 1}), BadNodeIndex);
}
