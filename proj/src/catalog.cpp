#include "minq/catalog.hpp"

#include <algorithm>

namespace minq {

const FixtureCatalog& fixture_e6() {
  static const FixtureCatalog cat{
      "E6 node 1",
      {
          {"6 5 2 4 3 1", 2, true,
           {"6 5", "2 4 3 1"}, {{2, "A2"}, {4, "A4"}},
           true, {"2", "6 5 4 3 1"}, {{1, "A1"}, {5, "A5"}}, 2, {}, {}},
          {"4 6 5 2 4 3 1", 2, true,
           {"4 2", "6 5 4 3 1"}, {{2, "A2"}, {5, "A5"}},
           false, {"6", "4 5 2 4 3 1"}, {}, 1, {}, {}},
          {"3 4 6 5 2 4 3 1", 2, true,
           {"3 4 2", "6 5 4 3 1"}, {{3, "A3"}, {5, "A5"}},
           false, {"6", "3 4 5 2 4 3 1"}, {}, 1, {}, {}},
          {"1 3 4 6 5 2 4 3 1", 2, true,
           {"1 3 4 2", "6 5 4 3 1"}, {{4, "A4"}, {5, "A5"}},
           true, {"6", "1 3 4 5 2 4 3 1"}, {{1, "A1"}, {8, "D5"}}, 2, {}, {}},
          {"4 1 3 5 4 6 5 2 4 3 1", 2, true,
           {"4 5 6", "1 3 4 5 2 4 3 1"}, {{3, "A3"}, {8, "D5"}},
           false, {"1", "4 5 6 3 4 5 2 4 3 1"}, {}, 1, {}, {}},
          {"2 4 1 3 5 4 6 5 2 4 3 1", 2, true,
           {"2 4 5 6", "1 3 4 5 2 4 3 1"}, {{4, "A4"}, {8, "D5"}},
           false, {"1", "2 4 5 6 3 4 5 2 4 3 1"}, {}, 1, {}, {}},
          {"6 5 4 3 2 4 1 3 5 4 6 5 2 4 3 1", 1, true,
           {"6 5 4 3 2 4 1 3 5 4 6 5 2 4 3 1"}, {{16, "E6"}},
           false, {}, {}, 1, {}, {}},
          // The one element whose standard resolution is singular while the
          // swapped ordering is smooth.
          {"1 3 5 4 6 5 2 4 3 1", 2, false,
           {"1 3", "5 4 6 5 2 4 3 1"}, {},
           true, {"5 6", "1 3 4 5 2 4 3 1"}, {{2, "A2"}, {8, "D5"}}, 1, {}, {}},
      }};
  return cat;
}

const FixtureCatalog& fixture_e7() {
  static const char* v = "7 6 5 4 3 2 4 5 6 7";
  static const FixtureCatalog cat{
      "E7 node 7",
      {
          {"1 3 2 4 5 6 7", 2, true,
           {"1 3", "2 4 5 6 7"}, {{2, "A2"}, {5, "A5"}},
           true, {"2", "1 3 4 5 6 7"}, {{1, "A1"}, {6, "A6"}}, 2, {}, {}},
          {"4 1 3 2 4 5 6 7", 2, true,
           {"4 2", "1 3 4 5 6 7"}, {{2, "A2"}, {6, "A6"}},
           false, {"1", "4 3 2 4 5 6 7"}, {}, 1, {}, {}},
          {"5 4 1 3 2 4 5 6 7", 2, true,
           {"5 4 2", "1 3 4 5 6 7"}, {{3, "A3"}, {6, "A6"}},
           false, {"1", "5 4 3 2 4 5 6 7"}, {}, 1, {}, {}},
          {"6 5 4 1 3 2 4 5 6 7", 2, true,
           {"6 5 4 2", "1 3 4 5 6 7"}, {{4, "A4"}, {6, "A6"}},
           false, {"1", "6 5 4 3 2 4 5 6 7"}, {}, 1, {}, {}},
          {"7 6 5 4 1 3 2 4 5 6 7", 2, true,
           {"7 6 5 4 2", "1 3 4 5 6 7"}, {{5, "A5"}, {6, "A6"}},
           true, {"1", "7 6 5 4 3 2 4 5 6 7"}, {{1, "A1"}, {10, "D6"}}, 2, {}, {}},
          {"3 7 6 5 4 1 3 2 4 5 6 7", 2, true,
           {"3 1", v}, {{2, "A2"}, {10, "D6"}},
           false, {"7 6 5", "3 4 1 3 2 4 5 6 7"}, {}, 1, {}, {}},
          {"4 3 7 6 5 4 1 3 2 4 5 6 7", 2, true,
           {"4 3 1", v}, {{3, "A3"}, {10, "D6"}},
           false, {"7 6", "4 3 5 4 1 3 2 4 5 6 7"}, {}, 1, {}, {}},
          {"2 4 3 7 6 5 4 1 3 2 4 5 6 7", 2, true,
           {"2 4 3 1", v}, {{4, "A4"}, {10, "D6"}},
           false, {"7 6", "2 4 3 5 4 1 3 2 4 5 6 7"}, {}, 1, {}, {}},
          {"5 4 3 7 6 5 4 1 3 2 4 5 6 7", 2, true,
           {"5 4 3 1", v}, {{4, "A4"}, {10, "D6"}},
           false, {"7", "5 4 3 6 5 4 1 3 2 4 5 6 7"}, {}, 1, {}, {}},
          // Three peaks: the standard ordering and exactly one other are smooth.
          {"5 2 4 3 7 6 5 4 1 3 2 4 5 6 7", 3, true,
           {"5", "2 4 3 1", v}, {{1, "A1"}, {4, "A4"}, {10, "D6"}},
           false, {}, {}, 2,
           {"2", "5 4 3 1", v}, {{1, "A1"}, {4, "A4"}, {10, "D6"}}},
          {"7 6 5 4 2 3 1 4 5 3 4 6 5 2 4 3 7 6 5 4 1 3 2 4 5 6 7", 1, true,
           {"7 6 5 4 2 3 1 4 5 3 4 6 5 2 4 3 7 6 5 4 1 3 2 4 5 6 7"}, {{27, "E7"}},
           false, {}, {}, 1, {}, {}},
      }};
  return cat;
}

namespace {

SystemType parse_type_name(const std::string& name) {
  return parse_system_type(name, 0);
}

bool factors_match(const RootSystem& sys, const std::vector<Word>& got,
                   const std::vector<const char*>& expected) {
  if (got.size() != expected.size()) return false;
  for (size_t i = 0; i < got.size(); ++i) {
    const Word fw = parse_word(sys, expected[i]);
    if (fw.size() != got[i].size()) return false;
    if (!(from_word(sys, fw) == from_word(sys, got[i]))) return false;
  }
  return true;
}

bool fibers_match(const std::vector<std::pair<int, SystemType>>& got,
                  const std::vector<FixtureFiber>& expected) {
  if (got.size() != expected.size()) return false;
  for (size_t i = 0; i < got.size(); ++i)
    if (got[i].first != expected[i].length ||
        got[i].second != parse_type_name(expected[i].type))
      return false;
  return true;
}

int count_smooth(const CatalogRow& row) {
  int c = 0;
  for (const auto& o : row.orderings) c += o.smooth ? 1 : 0;
  return c;
}

}  // namespace

std::vector<std::string> compare_catalog(const RootSystem& sys, const CatalogResult& got,
                                         const FixtureCatalog& expected) {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& s) { bad.push_back(std::string(expected.name) + ": " + s); };

  std::map<std::string, const CatalogRow*> by_word;
  for (const CatalogRow& row : got.rows) by_word[format_word(row.word)] = &row;

  // Set equality of the standard-smooth words.
  std::set<std::string> got_smooth, want_smooth;
  for (const CatalogRow& row : got.rows)
    if (row.standard_smooth) got_smooth.insert(format_word(row.word));
  for (const FixtureEntry& e : expected.entries)
    if (e.standard_smooth) want_smooth.insert(e.word);
  if (got_smooth != want_smooth) {
    for (const auto& w : got_smooth)
      if (!want_smooth.count(w)) complain("unexpected standard-smooth word: " + w);
    for (const auto& w : want_smooth)
      if (!got_smooth.count(w)) complain("missing standard-smooth word: " + w);
  }

  std::set<std::string> listed;
  for (const FixtureEntry& e : expected.entries) {
    listed.insert(e.word);
    auto it = by_word.find(e.word);
    if (it == by_word.end()) {
      complain(std::string("element not in computed catalog: ") + e.word);
      continue;
    }
    const CatalogRow& row = *it->second;
    const std::string tag = std::string("word ") + e.word;
    if (row.peak_count != e.peak_count) {
      complain(tag + ": peak count " + std::to_string(row.peak_count) + " != " +
               std::to_string(e.peak_count));
      continue;
    }
    const OrderingResult& std_res = row.orderings[0];
    if (std_res.smooth != e.standard_smooth)
      complain(tag + ": standard smoothness verdict differs");
    if (!e.standard_factors.empty() && !factors_match(sys, std_res.factor_words, e.standard_factors))
      complain(tag + ": standard factors differ");
    if (e.standard_smooth && !fibers_match(std_res.fibers, e.standard_fibers))
      complain(tag + ": standard fiber profile differs");

    if (e.peak_count == 2) {
      const OrderingResult& alt = row.orderings[1];
      if (alt.smooth != e.swapped_smooth)
        complain(tag + ": swapped-ordering verdict differs");
      if (!e.swapped_factors.empty() && !factors_match(sys, alt.factor_words, e.swapped_factors))
        complain(tag + ": swapped factors differ");
      if (e.swapped_smooth && !fibers_match(alt.fibers, e.swapped_fibers))
        complain(tag + ": swapped fiber profile differs");
    }
    if (count_smooth(row) != e.smooth_ordering_count)
      complain(tag + ": smooth ordering count " + std::to_string(count_smooth(row)) +
               " != " + std::to_string(e.smooth_ordering_count));
    if (!e.second_smooth_factors.empty()) {
      bool found = false;
      for (size_t oi = 1; oi < row.orderings.size() && !found; ++oi) {
        const OrderingResult& o = row.orderings[oi];
        if (o.smooth && factors_match(sys, o.factor_words, e.second_smooth_factors) &&
            fibers_match(o.fibers, e.second_smooth_fibers))
          found = true;
      }
      if (!found) complain(tag + ": second smooth ordering not found");
    }
  }

  // Everything the fixture does not list is singular in every ordering.
  for (const CatalogRow& row : got.rows) {
    if (listed.count(format_word(row.word))) continue;
    if (count_smooth(row) != 0)
      complain("unlisted element has a smooth ordering: " + format_word(row.word));
  }
  return bad;
}

}  // namespace minq
