#pragma once

#include <string>
#include <vector>

#include "decograph/decoration_graph.hpp"
#include "decograph/word_engine.hpp"

namespace decograph {

// Structural checks on a finished graph: unique source t_k, unique sink equal
// to the lowest term, acyclicity, diamond completion, slot-wise exponents in
// {-1,0,1}, no vertex with exps[j]=1 and exps[j+]=-1, a strictly positive
// exponent in every vertex, and t_k as the only exponent-nonnegative vertex.
// Returns human-readable violation descriptions; empty means all hold.
std::vector<std::string> graph_invariant_violations(const DecorationGraph& dg);

struct VerifyReport {
  bool ok = false;
  int monomial_count = 0;
  std::vector<std::string> failures;
};

// Builds the graph and the trail enumeration for a minuscule node and checks
// that the vertex set equals the oracle monomial set (coefficients all 1,
// trail-to-monomial map injective) plus every graph invariant above.
VerifyReport verify_instance(const ReducedWord& w, int i, int max_rounds = 0);

}  // namespace decograph
