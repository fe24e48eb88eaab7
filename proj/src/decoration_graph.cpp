#include "decograph/decoration_graph.hpp"

#include <unordered_map>

#include "decograph/trail_oracle.hpp"

namespace decograph {

namespace {

int default_max_rounds(const ReducedWord& w, int i) {
  const int N = w.N();
  if (is_minuscule_node(w.datum, i)) {
    const int nweights = static_cast<int>(
        weight_orbit(w.datum, fundamental_weight(w.datum, dual_node(w, i)))
            .size());
    return 4 * N * nweights;
  }
  return 4 * N * N;
}

}  // namespace

DecorationGraph build_decoration_graph(const ReducedWord& w, int i,
                                       const BuildLimits& limits) {
  const RootDatum& d = w.datum;
  if (i < 1 || i > d.rank) {
    throw Error(ErrorCode::LetterOutOfRange,
                "node " + std::to_string(i) + " outside [1," +
                    std::to_string(d.rank) + "]");
  }
  const bool minuscule = is_minuscule_node(d, i);
  if (!minuscule && !limits.force && !is_adapted(w).adapted) {
    throw Error(ErrorCode::NotMinusculeNotAdapted,
                "node " + std::to_string(i) + " of " + datum_name(d) +
                    " is not minuscule and the word is not adapted; "
                    "pass force to run anyway");
  }
  const int N = w.N();
  const int max_rounds =
      limits.max_rounds > 0 ? limits.max_rounds : default_max_rounds(w, i);

  // Exchange monomials for every position with a next occurrence.
  std::vector<ExpMonomial> aj(N + 1);
  std::vector<char> has_aj(N + 1, 0);
  for (int j = 1; j <= N; ++j) {
    if (jplus(w, j) <= N) {
      aj[j] = a_monomial(w, j);
      has_aj[j] = 1;
    }
  }
  const ExpMonomial low = lowest_term(w, i);

  DecorationGraph dg;
  dg.word = w;
  dg.i = i;
  dg.minuscule = minuscule;
  dg.conjectural = !minuscule;
  dg.vertices.push_back(highest_term(w, i));
  std::unordered_map<ExpMonomial, int, ExpMonomialHash> index;
  index[dg.vertices[0]] = 0;
  std::vector<int> outdeg{0};

  while (true) {
    std::vector<int> sinks;
    bool only_low = true;
    for (size_t v = 0; v < dg.vertices.size(); ++v) {
      if (outdeg[v] == 0) {
        sinks.push_back(static_cast<int>(v));
        only_low = only_low && dg.vertices[v] == low;
      }
    }
    if (sinks.empty()) {
      throw Error(ErrorCode::StuckSink,
                  "expansion closed into cycles; no sink remains");
    }
    if (only_low) break;
    if (++dg.rounds > max_rounds) {
      throw Error(ErrorCode::NonTermination,
                  "no stable sink after " + std::to_string(max_rounds) +
                      " rounds");
    }
    for (int v : sinks) {
      const ExpMonomial vertex = dg.vertices[v];  // growth invalidates refs
      if (vertex == low) continue;
      bool expanded = false;
      for (int j = 1; j <= N; ++j) {
        if (!has_aj[j]) continue;
        if (vertex.exps[j - 1] <= 0) continue;
        if (vertex.exps[jplus(w, j) - 1] > 0) continue;
        const ExpMonomial target = mono_combine(vertex, aj[j], -1);
        auto [it, fresh] = index.try_emplace(target, static_cast<int>(dg.vertices.size()));
        if (fresh) {
          dg.vertices.push_back(target);
          outdeg.push_back(0);
        }
        dg.edges.push_back(DGEdge{v, it->second, j});
        ++outdeg[v];
        expanded = true;
      }
      if (!expanded) {
        throw Error(ErrorCode::StuckSink,
                    "sink " + render(vertex) + " admits no expansion and is "
                        "not the lowest term " + render(low));
      }
    }
  }
  const auto sink_it = index.find(low);
  if (sink_it == index.end()) {
    throw Error(ErrorCode::InternalInconsistency, "lowest term never reached");
  }
  dg.sink_idx = sink_it->second;
  return dg;
}

MinorResult graph_minor_polynomial(const DecorationGraph& dg) {
  return MinorResult{poly_from_monomials(dg.vertices), dg.minuscule};
}

PolicyMinor minor_by_policy(const ReducedWord& w, int i,
                            const BuildLimits& limits) {
  if (is_minuscule_node(w.datum, i)) {
    BuildLimits lim = limits;
    lim.force = false;
    return PolicyMinor{build_decoration_graph(w, i, lim).vertices, true, false};
  }
  if (w.letter(w.N()) == i) {
    // J = k = N: the minor collapses to the single monomial t_N.
    return PolicyMinor{{lowest_term(w, i)}, true, false};
  }
  BuildLimits lim = limits;  // adaptedness is re-checked by the build
  return PolicyMinor{build_decoration_graph(w, i, lim).vertices, false, true};
}

GraphSummary graph_summary(const DecorationGraph& dg) {
  GraphSummary s;
  s.vertex_count = static_cast<int>(dg.vertices.size());
  s.edge_count = static_cast<int>(dg.edges.size());
  s.source = dg.vertices[dg.source_idx];
  s.sink = dg.vertices[dg.sink_idx];
  s.rounds = dg.rounds;
  // Kahn peel to certify acyclicity.
  std::vector<int> indeg(dg.vertices.size(), 0);
  for (const auto& e : dg.edges) ++indeg[e.dst];
  std::vector<int> queue;
  for (size_t v = 0; v < dg.vertices.size(); ++v) {
    if (indeg[v] == 0) queue.push_back(static_cast<int>(v));
  }
  size_t peeled = 0;
  while (peeled < queue.size()) {
    const int v = queue[peeled++];
    for (const auto& e : dg.edges) {
      if (e.src == v && --indeg[e.dst] == 0) queue.push_back(e.dst);
    }
  }
  s.is_dag = peeled == dg.vertices.size();
  return s;
}

}  // namespace decograph
