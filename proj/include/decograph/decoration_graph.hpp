#pragma once

#include <vector>

#include "decograph/laurent_algebra.hpp"
#include "decograph/word_engine.hpp"

namespace decograph {

struct BuildLimits {
  int max_rounds = 0;  // 0 = automatic cap
  bool force = false;  // run non-minuscule non-adapted inputs anyway
};

struct DGEdge {
  int src, dst;  // vertex indices
  int label;     // position j in [1,N]
};

// Grown from t_k by repeatedly dividing sinks by exchange monomials A_j.
// Vertices are deduplicated by exponent vector; parallel edges with distinct
// labels are kept. vertices[source_idx] = t_k; vertices[sink_idx] = lowest term.
struct DecorationGraph {
  ReducedWord word;
  int i;
  bool minuscule;    // coefficients are all 1 exactly in this case
  bool conjectural;  // built for a non-minuscule node (adaptedness or force)
  std::vector<ExpMonomial> vertices;
  std::vector<DGEdge> edges;
  int source_idx = 0;
  int sink_idx = -1;
  int rounds = 0;
};

// Round l: every sink M with an admissible position j (j+ <= N, exps[j] > 0,
// exps[j+] <= 0) grows edge M -> M / A_j. Stops when the lowest term is the
// only sink. Throws NotMinusculeNotAdapted (precondition refusal), StuckSink
// (a sink other than the lowest term has no admissible position), or
// NonTermination (round cap exceeded).
DecorationGraph build_decoration_graph(const ReducedWord& w, int i,
                                       const BuildLimits& limits = {});

// Sum of vertex monomials with coefficient 1 each. For a non-minuscule node
// the graph does not carry coefficients, so the polynomial is only the
// monomial set and coefficients_exact is false.
struct MinorResult {
  LaurentPoly poly;
  bool coefficients_exact;
};
MinorResult graph_minor_polynomial(const DecorationGraph& dg);

struct GraphSummary {
  int vertex_count = 0;
  int edge_count = 0;
  ExpMonomial source;
  ExpMonomial sink;
  int rounds = 0;
  bool is_dag = false;
};
GraphSummary graph_summary(const DecorationGraph& dg);

// Minor monomials for any node under the default policy: a minuscule node
// runs the graph algorithm (exact); i_N = i collapses to the single monomial
// t_N (exact, highest and lowest term coincide); any other node requires an
// adapted word or force and the monomial list is conjectural with coefficients
// unknown. Throws NotMinusculeNotAdapted outside these cases.
struct PolicyMinor {
  std::vector<ExpMonomial> monomials;
  bool coefficients_exact;
  bool conjectural;
};
PolicyMinor minor_by_policy(const ReducedWord& w, int i,
                            const BuildLimits& limits = {});

}  // namespace decograph
