#include "decograph/verify.hpp"

#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "decograph/trail_oracle.hpp"

namespace decograph {

std::vector<std::string> graph_invariant_violations(const DecorationGraph& dg) {
  std::vector<std::string> bad;
  const ReducedWord& w = dg.word;
  const int N = w.N();
  const ExpMonomial top = highest_term(w, dg.i);
  const ExpMonomial low = lowest_term(w, dg.i);

  std::vector<int> indeg(dg.vertices.size(), 0), outdeg(dg.vertices.size(), 0);
  for (const auto& e : dg.edges) {
    ++outdeg[e.src];
    ++indeg[e.dst];
  }
  std::vector<int> sources, sinks;
  for (size_t v = 0; v < dg.vertices.size(); ++v) {
    if (indeg[v] == 0) sources.push_back(static_cast<int>(v));
    if (outdeg[v] == 0) sinks.push_back(static_cast<int>(v));
  }
  if (sources.size() != 1 || !(dg.vertices[sources[0]] == top)) {
    bad.push_back("source is not the unique vertex " + render(top));
  }
  if (sinks.size() != 1 || !(dg.vertices[sinks[0]] == low)) {
    bad.push_back("sink is not the unique vertex " + render(low));
  }
  if (!graph_summary(dg).is_dag) bad.push_back("graph has a directed cycle");

  // Diamond completion: two expansions of one vertex close at the common
  // quotient by both exchange monomials.
  std::set<std::tuple<int, int, int>> edge_set;
  for (const auto& e : dg.edges) edge_set.insert({e.src, e.dst, e.label});
  std::unordered_map<ExpMonomial, int, ExpMonomialHash> index;
  for (size_t v = 0; v < dg.vertices.size(); ++v) {
    index[dg.vertices[v]] = static_cast<int>(v);
  }
  std::vector<std::vector<DGEdge>> out(dg.vertices.size());
  for (const auto& e : dg.edges) out[e.src].push_back(e);
  for (size_t v = 0; v < dg.vertices.size(); ++v) {
    for (size_t a = 0; a < out[v].size(); ++a) {
      for (size_t b = a + 1; b < out[v].size(); ++b) {
        const DGEdge& ea = out[v][a];
        const DGEdge& eb = out[v][b];
        if (ea.label == eb.label) continue;
        const ExpMonomial meet = mono_combine(
            dg.vertices[ea.dst], a_monomial(w, eb.label), -1);
        const auto it = index.find(meet);
        if (it == index.end() ||
            !edge_set.count({ea.dst, it->second, eb.label}) ||
            !edge_set.count({eb.dst, it->second, ea.label})) {
          bad.push_back("diamond from " + render(dg.vertices[v]) +
                        " via labels " + std::to_string(ea.label) + "," +
                        std::to_string(eb.label) + " does not close");
        }
      }
    }
  }

  for (size_t v = 0; v < dg.vertices.size(); ++v) {
    const ExpMonomial& m = dg.vertices[v];
    bool has_positive = false;
    bool all_nonneg = true;
    for (int j = 1; j <= N; ++j) {
      const int e = m.exps[j - 1];
      if (e < -1 || e > 1) {
        bad.push_back("vertex " + render(m) + " has exponent " +
                      std::to_string(e) + " at slot " + std::to_string(j));
      }
      has_positive = has_positive || e > 0;
      all_nonneg = all_nonneg && e >= 0;
      const int jp = jplus(w, j);
      if (e == 1 && jp <= N && m.exps[jp - 1] == -1) {
        bad.push_back("vertex " + render(m) + " has exps[" + std::to_string(j) +
                      "]=1 with exps[" + std::to_string(jp) + "]=-1");
      }
    }
    if (!has_positive) {
      bad.push_back("vertex " + render(m) + " has no positive exponent");
    }
    if (all_nonneg && !(m == top)) {
      bad.push_back("vertex " + render(m) +
                    " is exponent-nonnegative but is not the source");
    }
  }
  return bad;
}

VerifyReport verify_instance(const ReducedWord& w, int i, int max_rounds) {
  VerifyReport report;
  const DecorationGraph dg =
      build_decoration_graph(w, i, BuildLimits{max_rounds, false});
  const LaurentPoly oracle = minor_via_trails(w, i);  // multiplicities checked

  std::unordered_set<ExpMonomial, ExpMonomialHash> dg_set(dg.vertices.begin(),
                                                          dg.vertices.end());
  report.monomial_count = static_cast<int>(dg_set.size());
  if (dg_set.size() != dg.vertices.size()) {
    report.failures.push_back("graph vertex list contains duplicates");
  }
  if (dg_set.size() != oracle.terms.size()) {
    report.failures.push_back(
        "graph has " + std::to_string(dg_set.size()) + " monomials, oracle has " +
        std::to_string(oracle.terms.size()));
  }
  for (const auto& [mono, coeff] : oracle.terms) {
    if (!dg_set.count(mono)) {
      report.failures.push_back("oracle monomial " + render(mono) +
                                " missing from graph");
    }
  }
  for (const auto& v : dg.vertices) {
    if (!oracle.terms.count(v)) {
      report.failures.push_back("graph vertex " + render(v) +
                                " missing from oracle");
    }
  }
  for (auto& violation : graph_invariant_violations(dg)) {
    report.failures.push_back(std::move(violation));
  }
  report.ok = report.failures.empty();
  return report;
}

}  // namespace decograph
