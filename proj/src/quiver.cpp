#include "minq/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace minq {

std::optional<int> successor(const QuiverW& q, int i) {
  if (!q.vertex_valid(i)) throw VertexOutOfRange("successor vertex");
  for (int j = i + 1; j <= q.k; ++j)
    if (q.colors[size_t(j) - 1] == q.colors[size_t(i) - 1]) return j;
  return std::nullopt;
}

std::optional<int> predecessor(const QuiverW& q, int i) {
  if (!q.vertex_valid(i)) throw VertexOutOfRange("predecessor vertex");
  for (int j = i - 1; j >= 1; --j)
    if (q.colors[size_t(j) - 1] == q.colors[size_t(i) - 1]) return j;
  return std::nullopt;
}

QuiverW build_quiver(const RootSystem& sys, const Word& word) {
  for (int c : word)
    if (!sys.node_valid(c)) throw BadNodeIndex("quiver word letter");
  WeylElement w = from_word(sys, word);
  if (w.len != int(word.size()))
    throw NonReducedWord("word of length " + std::to_string(word.size()) +
                         " multiplies to an element of length " + std::to_string(w.len));

  QuiverW q;
  q.k = int(word.size());
  q.source_word = word;
  q.colors = word;
  q.above.assign(size_t(q.k), std::vector<bool>(size_t(q.k), false));

  for (int i = 1; i <= q.k; ++i) {
    const std::optional<int> si = successor(q, i);
    const int limit = si ? *si : q.k + 1;
    for (int j = i + 1; j < limit; ++j) {
      if (sys.cartan[size_t(word[size_t(j) - 1]) - 1][size_t(word[size_t(i) - 1]) - 1] == 0)
        continue;
      q.arrows.emplace_back(i, j);
      q.above[size_t(i) - 1][size_t(j) - 1] = true;
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end());

  // Transitive closure; arrows only go forward, so antisymmetry is automatic.
  for (int mid = 0; mid < q.k; ++mid)
    for (int i = 0; i < q.k; ++i) {
      if (!q.above[size_t(i)][size_t(mid)]) continue;
      for (int j = 0; j < q.k; ++j)
        if (q.above[size_t(mid)][size_t(j)]) q.above[size_t(i)][size_t(j)] = true;
    }

  for (int j = 1; j <= q.k; ++j) {
    bool minimal = true;
    for (int i = 1; i < j && minimal; ++i)
      if (q.above[size_t(i) - 1][size_t(j) - 1]) minimal = false;
    if (minimal) q.peaks.push_back(j);
  }
  return q;
}

std::vector<int> subquiver_QA(const QuiverW& q, const std::vector<int>& A) {
  std::set<int> peak_set(q.peaks.begin(), q.peaks.end());
  std::set<int> a_set;
  for (int p : A) {
    if (!peak_set.count(p)) throw NotAPeak("vertex " + std::to_string(p) + " is not a peak");
    a_set.insert(p);
  }
  std::vector<int> out;
  for (int i = 1; i <= q.k; ++i) {
    bool keep = true;
    for (int p : q.peaks) {
      if (a_set.count(p)) continue;
      if (q.le(p, i)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(i);
  }
  return out;
}

namespace {

Word letters_at(const Word& word, const std::vector<int>& vertices) {
  Word out;
  out.reserve(vertices.size());
  for (int v : vertices) out.push_back(word[size_t(v) - 1]);
  return out;
}

void check_single_peak(const RootSystem& sys, const Word& factor_word, int expected_color) {
  QuiverW fq = build_quiver(sys, factor_word);
  if (fq.peaks.size() != 1)
    throw InternalGoodnessViolation("factor quiver has " + std::to_string(fq.peaks.size()) +
                                    " peaks");
  if (fq.colors[size_t(fq.peaks[0]) - 1] != expected_color)
    throw InternalGoodnessViolation("factor peak color mismatch");
}

}  // namespace

GenDecomposition construction_one(const RootSystem& sys, const Word& word,
                                  const std::vector<int>& peak_order) {
  const QuiverW q0 = build_quiver(sys, word);
  {
    std::vector<int> sorted = peak_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != q0.peaks)
      throw BadPeakOrder("ordering is not a permutation of the peaks " +
                         format_word(q0.peaks));
  }

  GenDecomposition d;
  d.source_word = word;
  d.peak_order = peak_order;

  std::vector<int> remaining(size_t(q0.k));
  for (int i = 0; i < q0.k; ++i) remaining[size_t(i)] = i + 1;

  for (size_t step = 0; step < peak_order.size(); ++step) {
    const QuiverW qc = build_quiver(sys, letters_at(word, remaining));

    // The untaken original peaks must be exactly the peaks of the current
    // quiver; anything else is a bug.
    std::vector<int> expected;
    for (size_t t = step; t < peak_order.size(); ++t) expected.push_back(peak_order[t]);
    std::sort(expected.begin(), expected.end());
    std::vector<int> current;
    for (int p : qc.peaks) current.push_back(remaining[size_t(p) - 1]);
    std::sort(current.begin(), current.end());
    if (current != expected)
      throw InternalGoodnessViolation("peak set drifted while peeling");

    int local_peak = 0;
    for (int p = 1; p <= qc.k; ++p)
      if (remaining[size_t(p) - 1] == peak_order[step]) local_peak = p;
    const std::vector<int> taken = subquiver_QA(qc, {local_peak});

    Word factor_word;
    std::vector<int> rest;
    std::set<int> taken_set(taken.begin(), taken.end());
    for (int p = 1; p <= qc.k; ++p) {
      if (taken_set.count(p))
        factor_word.push_back(word[size_t(remaining[size_t(p) - 1]) - 1]);
      else
        rest.push_back(remaining[size_t(p) - 1]);
    }
    WeylElement factor = from_word(sys, factor_word);
    if (factor.len != int(factor_word.size()))
      throw InternalGoodnessViolation("factor word is not reduced");
    check_single_peak(sys, factor_word, word[size_t(peak_order[step]) - 1]);

    d.factor_words.push_back(std::move(factor_word));
    d.factors.push_back(std::move(factor));
    d.peak_colors.push_back(word[size_t(peak_order[step]) - 1]);
    remaining = std::move(rest);
  }
  if (!remaining.empty())
    throw InternalGoodnessViolation("peeling left vertices behind");

  WeylElement prod = identity_element(sys);
  int total = 0;
  for (const WeylElement& f : d.factors) {
    prod = mul(sys, prod, f);
    total += f.len;
  }
  if (!(prod == from_word(sys, word)) || total != q0.k)
    throw InternalGoodnessViolation("factor product or length sum mismatch");

  GoodnessReport g = is_good(sys, d);
  if (!g.good)
    throw InternalGoodnessViolation("construction 1 output failed the goodness check at factor " +
                                    std::to_string(g.failing_index) + ": " + g.detail);
  d.good = true;
  d.smooth = is_smooth(sys, d);
  return d;
}

GenDecomposition make_gen_decomposition(const RootSystem& sys,
                                        const std::vector<Word>& factor_words) {
  GenDecomposition d;
  WeylElement prod = identity_element(sys);
  int total = 0;
  for (const Word& fw : factor_words) {
    WeylElement f = from_word(sys, fw);
    if (f.len != int(fw.size())) throw NonReducedWord("factor word is not reduced");
    QuiverW fq = build_quiver(sys, fw);
    if (fq.peaks.size() != 1)
      throw DomainError("factor has " + std::to_string(fq.peaks.size()) +
                        " peaks; construction-1 factors must have exactly one");
    d.peak_colors.push_back(fq.colors[size_t(fq.peaks[0]) - 1]);
    total += f.len;
    prod = mul(sys, prod, f);
    d.factor_words.push_back(fw);
    d.factors.push_back(std::move(f));
    for (int c : fw) d.source_word.push_back(c);
  }
  if (prod.len != total)
    throw DomainError("factor lengths do not add up: product has length " +
                      std::to_string(prod.len) + ", sum is " + std::to_string(total));
  d.good = is_good(sys, d).good;
  d.smooth = is_smooth(sys, d);
  return d;
}

GoodnessReport is_good(const RootSystem& sys, const GenDecomposition& d) {
  GoodnessReport rep;

  WeylElement w = identity_element(sys);
  for (const WeylElement& f : d.factors) w = mul(sys, w, f);
  const std::set<int> iw_prod = upper_index_set(sys, w);
  std::vector<int> complement;
  for (int i = 1; i <= sys.rank; ++i)
    if (!iw_prod.count(i)) complement.push_back(i);
  const bool minuscule = complement.empty() ||
                         (complement.size() == 1 && sys.is_minuscule_node(complement[0]));
  if (!minuscule) {
    rep.detail = "product is not a minuscule element";
    return rep;
  }

  for (int i = 0; i + 1 < d.m(); ++i) {
    const WeylElement& wi = d.factors[size_t(i)];
    WeylElement tail = identity_element(sys);
    for (int j = i + 1; j < d.m(); ++j) tail = mul(sys, tail, d.factors[size_t(j)]);

    const std::set<int> supp = support(sys, wi);
    const std::set<int> iw = upper_index_set(sys, wi);
    std::set<int> lower;  // I^{w_i} ^ Supp(w_i)
    for (int a : iw)
      if (supp.count(a)) lower.insert(a);
    const std::set<int> mid = stabilizer_index_set(sys, tail);
    // Upper bound: w_i-perp u I^{w_i}. Writing Supp(w_i) instead of I^{w_i}
    // here would reject every multi-factor peeling of Q_w (the stabilizer of
    // the tail contains nodes adjacent to Supp(w_i) whenever the tail's
    // Schubert variety is G_{w_i}-stable), so the sandwich is checked with
    // the index set.
    std::set<int> upper = perp_set(sys, wi);
    upper.insert(iw.begin(), iw.end());

    if (!std::includes(mid.begin(), mid.end(), lower.begin(), lower.end())) {
      rep.failing_index = i + 1;
      rep.detail = "lower inclusion fails";
      return rep;
    }
    if (!std::includes(upper.begin(), upper.end(), mid.begin(), mid.end())) {
      rep.failing_index = i + 1;
      rep.detail = "upper inclusion fails";
      return rep;
    }
  }
  rep.good = true;
  return rep;
}

bool is_smooth(const RootSystem& sys, const GenDecomposition& d) {
  for (int j = 0; j < d.m(); ++j) {
    const std::set<int> supp = support(sys, d.factors[size_t(j)]);
    const int color = d.peak_colors[size_t(j)];
    for (const DiagramComponent& comp : subdiagram_components(sys, supp))
      if (comp.contains(color)) {
        if (!node_minuscule_in_component(comp, color)) return false;
        break;
      }
  }
  return true;
}

std::vector<std::pair<int, SystemType>> fiber_profile(const RootSystem& sys,
                                                      const GenDecomposition& d) {
  std::vector<std::pair<int, SystemType>> out;
  for (const WeylElement& f : d.factors) {
    const std::set<int> supp = support(sys, f);
    auto comps = subdiagram_components(sys, supp);
    if (comps.size() != 1)
      throw InternalError("factor support is disconnected");
    out.emplace_back(f.len, comps[0].type);
  }
  return out;
}

std::string to_dot(const QuiverW& q) {
  std::set<int> peak_set(q.peaks.begin(), q.peaks.end());
  std::string out = "digraph quiver {\n";
  for (int i = 1; i <= q.k; ++i) {
    out += "  v" + std::to_string(i) + " [label=\"v" + std::to_string(i) + ":α" +
           std::to_string(q.colors[size_t(i) - 1]) + "\", shape=" +
           (peak_set.count(i) ? "doublecircle" : "circle") + "];\n";
  }
  for (auto [i, j] : q.arrows)
    out += "  v" + std::to_string(i) + " -> v" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace minq
