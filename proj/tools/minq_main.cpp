// minq: minuscule Schubert quiver toolkit.
//
// Subcommands: enumerate, quiver, decompose, verify, catalog.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "minq/suites.hpp"

namespace {

using namespace minq;

struct TypeOptions {
  std::string family;
  int rank = 0;

  RootSystem build() const { return build_root_system(parse_system_type(family, rank)); }
};

void add_type_options(CLI::App* cmd, TypeOptions& t, bool required = true) {
  auto* opt = cmd->add_option("--type", t.family, "family: A, D, E (or combined, e.g. E6)");
  if (required) opt->required();
  cmd->add_option("--rank", t.rank, "rank (may be part of --type)");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open output file '" + path + "'");
  out << text;
}

std::string fibers_text(const std::vector<std::pair<int, SystemType>>& fibers) {
  std::string s;
  for (const auto& [len, t] : fibers)
    s += " (" + std::to_string(len) + "," + t.name() + ")";
  return s;
}

int cmd_enumerate(const TypeOptions& topt, int node, bool all, const std::string& format,
                  const std::string& output) {
  const RootSystem sys = topt.build();
  const CosetContext ctx = make_coset_context(sys, node);

  struct Row {
    Word word;
    int length;
    int peaks;
    bool full;
  };
  std::vector<Row> rows;
  int full_count = 0;
  for (const MinusculeElement& e : enumerate_minuscule(ctx)) {
    const bool full = support(sys, e.w).size() == size_t(sys.rank);
    full_count += full ? 1 : 0;
    if (!full && !all) continue;
    const Word word = canonical_word(ctx, e.w);
    rows.push_back({word, e.w.len, int(build_quiver(sys, word).peaks.size()), full});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.length != b.length ? a.length < b.length : a.word < b.word;
  });

  const int orbit = int(enumerate_minuscule(ctx).size());
  if (format == "json") {
    json out = {{"type", sys.type.name()}, {"node", node}, {"orbit_size", orbit},
                {"full_support", full_count}, {"elements", json::array()}};
    for (const Row& r : rows)
      out["elements"].push_back({{"word", format_word(r.word)},
                                 {"length", r.length},
                                 {"peaks", r.peaks},
                                 {"full_support", r.full}});
    write_output(output, out.dump(2) + "\n");
  } else {
    std::string text = "# type=" + sys.type.name() + " node=" + std::to_string(node) +
                       " orbit=" + std::to_string(orbit) +
                       " full_support=" + std::to_string(full_count) +
                       " listed=" + std::to_string(rows.size()) + "\n";
    for (const Row& r : rows)
      text += "length=" + std::to_string(r.length) + " peaks=" + std::to_string(r.peaks) +
              " word=\"" + format_word(r.word) + "\"\n";
    write_output(output, text);
  }
  return 0;
}

int cmd_quiver(const TypeOptions& topt, const std::string& word_text,
               const std::string& format, const std::string& output) {
  const RootSystem sys = topt.build();
  const QuiverW q = build_quiver(sys, parse_word(sys, word_text));
  if (format == "json")
    write_output(output, quiver_to_json(q).dump(2) + "\n");
  else
    write_output(output, to_dot(q));
  return 0;
}

int cmd_decompose(const TypeOptions& topt, const std::string& word_text,
                  const std::string& ordering_text, const std::string& format,
                  const std::string& output) {
  const RootSystem sys = topt.build();
  const Word word = parse_word(sys, word_text);
  const QuiverW q = build_quiver(sys, word);

  std::vector<std::vector<int>> orderings;
  if (ordering_text == "standard") {
    orderings.push_back(q.peaks);
  } else if (ordering_text == "all") {
    std::vector<int> ord = q.peaks;
    do {
      orderings.push_back(ord);
    } while (std::next_permutation(ord.begin(), ord.end()));
  } else {
    // explicit list of peak vertex indices
    std::vector<int> ord;
    std::istringstream in(ordering_text);
    int v;
    while (in >> v) ord.push_back(v);
    if (!in.eof()) throw BadPeakOrder("cannot parse ordering '" + ordering_text + "'");
    orderings.push_back(std::move(ord));
  }

  json arr = json::array();
  std::string text;
  for (const auto& ord : orderings) {
    const GenDecomposition d = construction_one(sys, word, ord);
    if (format == "json") {
      arr.push_back(decomposition_to_json(sys, d));
      continue;
    }
    const auto fibers = fiber_profile(sys, d);
    text += "word=\"" + format_word(word) + "\" ordering=\"" + format_word(ord) +
            "\" good=" + (d.good ? "true" : "false") +
            " smooth=" + (d.smooth ? "true" : "false") + "\n";
    for (int i = 0; i < d.m(); ++i)
      text += "  factor " + std::to_string(i + 1) + ": word=\"" +
              format_word(d.factor_words[size_t(i)]) +
              "\" length=" + std::to_string(d.factors[size_t(i)].len) + " support=" +
              fibers[size_t(i)].second.name() +
              " peak_color=" + std::to_string(d.peak_colors[size_t(i)]) + "\n";
    text += "  fibers:" + fibers_text(fibers) + "\n";
  }
  write_output(output, format == "json" ? arr.dump(2) + "\n" : text);
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& type_filter, int max_rank_a,
               int max_rank_d, bool rows, const std::string& output) {
  std::vector<SuiteResult> results;
  if (suite == "weyl-equality" && !type_filter.empty()) {
    if (type_filter == "A")
      results.push_back(suite_weyl_equality_a(max_rank_a, rows));
    else if (type_filter == "D")
      results.push_back(suite_weyl_equality_d(max_rank_d, rows));
    else if (type_filter == "E")
      results.push_back(suite_weyl_equality_e(rows));
    else
      throw DomainError("--type must be A, D or E for this suite");
  } else {
    results = run_suites(suite, max_rank_a, max_rank_d, rows);
  }

  bool all_pass = true;
  json report = {{"suites", json::array()}};
  for (const SuiteResult& r : results) {
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": "
              << r.instances << " instances";
    if (!r.pass) std::cout << ", " << r.failures.size() << " failures";
    std::cout << " (" << r.seconds << " s)\n";
    for (size_t i = 0; i < r.failures.size() && i < 10; ++i)
      std::cout << "       " << r.failures[i] << "\n";
    report["suites"].push_back(r.report);
  }
  if (!output.empty()) write_output(output, report.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

int cmd_catalog(const TypeOptions& topt, int node, const std::string& format,
                const std::string& output) {
  const RootSystem sys = topt.build();
  if (sys.type.family != Family::E)
    throw WrongType("the exceptional catalog requires type E6 or E7");
  const int actual_node = node ? node : (sys.type.rank == 6 ? 1 : 7);
  const CosetContext ctx = make_coset_context(sys, actual_node);
  const CatalogResult cat = classify_exceptional(ctx);
  if (format == "json") {
    write_output(output, catalog_to_json(sys, cat).dump(2) + "\n");
    return 0;
  }
  std::string text = "# " + sys.type.name() + " node " + std::to_string(actual_node) +
                     ": orbit=" + std::to_string(cat.orbit_size) +
                     " full_support=" + std::to_string(cat.full_support) + "\n";
  for (const CatalogRow& row : cat.rows) {
    text += "word=\"" + format_word(row.word) + "\" length=" + std::to_string(row.length) +
            " peaks=" + std::to_string(row.peak_count) +
            " standard_smooth=" + (row.standard_smooth ? "true" : "false") + "\n";
    for (const OrderingResult& o : row.orderings) {
      text += "  ordering=\"" + format_word(o.ordering) + "\" smooth=" +
              (o.smooth ? "true" : "false") + " factors=";
      for (size_t i = 0; i < o.factor_words.size(); ++i)
        text += (i ? " | " : "") + format_word(o.factor_words[i]);
      text += " fibers:" + fibers_text(o.fibers) + "\n";
    }
  }
  write_output(output, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minuscule Schubert quivers: enumeration, decompositions, verification"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "INI file with [subcommand] sections; give it before the subcommand");

  TypeOptions topt;
  int node = 0;
  bool all = false;
  std::string format, output, word_text, ordering = "standard";
  std::string suite = "all", type_filter;
  int max_rank_a = 7, max_rank_d = 7;
  bool rows = false;

  auto* enumerate = app.add_subcommand("enumerate", "list minuscule coset representatives");
  enumerate->configurable();
  add_type_options(enumerate, topt);
  enumerate->add_option("--node", node, "minuscule node r (I = S minus alpha_r)")->required();
  enumerate->add_flag("--all", all, "include elements without full support");
  enumerate->add_option("--format", format, "text|json")->default_val("text");
  enumerate->add_option("--output", output, "write to file instead of stdout");

  auto* quiver = app.add_subcommand("quiver", "quiver of a reduced word");
  quiver->configurable();
  add_type_options(quiver, topt);
  quiver->add_option("--word", word_text, "reduced word, e.g. \"6 5 2 4 3 1\"")->required();
  quiver->add_option("--format", format, "dot|json")->default_val("dot");
  quiver->add_option("--output", output, "write to file instead of stdout");

  auto* decompose = app.add_subcommand("decompose", "construction-1 decompositions");
  decompose->configurable();
  add_type_options(decompose, topt);
  decompose->add_option("--word", word_text, "reduced word")->required();
  decompose->add_option("--ordering", ordering,
                        "standard | all | explicit peak vertices, e.g. \"3 1\"");
  decompose->add_option("--format", format, "text|json")->default_val("text");
  decompose->add_option("--output", output, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->configurable();
  verify->add_option("--suite", suite, "one of: weyl-equality, remark-d8, catalog-e6, "
                                       "catalog-e7, root-inequality, lemmas, "
                                       "oracle-equivalence, quiver-invariance, all");
  verify->add_option("--type", type_filter, "restrict weyl-equality to A, D or E");
  verify->add_option("--max-rank", max_rank_a, "rank bound for type A sweeps")->default_val(7);
  verify->add_option("--max-rank-d", max_rank_d, "rank bound for type D sweeps")->default_val(7);
  verify->add_flag("--rows", rows, "include per-instance rows in the JSON report");
  verify->add_option("--output", output, "write the JSON report to this file");

  auto* catalog = app.add_subcommand("catalog", "full exceptional catalog (E6/E7)");
  catalog->configurable();
  add_type_options(catalog, topt);
  catalog->add_option("--node", node, "minuscule node (default: 1 for E6, 7 for E7)");
  catalog->add_option("--format", format, "text|json")->default_val("text");
  catalog->add_option("--output", output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(topt, node, all, format, output);
    if (quiver->parsed()) return cmd_quiver(topt, word_text, format, output);
    if (decompose->parsed()) return cmd_decompose(topt, word_text, ordering, format, output);
    if (verify->parsed())
      return cmd_verify(suite, type_filter, max_rank_a, max_rank_d, rows, output);
    if (catalog->parsed()) return cmd_catalog(topt, node, format, output);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
