#pragma once

#include <vector>

#include "decograph/laurent_algebra.hpp"
#include "decograph/root_data.hpp"
#include "decograph/word_engine.hpp"

namespace decograph {

// Weight path gamma_0..gamma_N with gamma_{l-1} - gamma_l = c_l * alpha_{i_l}
// and d_l = c_l + <h_{i_l}, gamma_l>.
struct Trail {
  std::vector<Weight> gammas;  // gammas[l] = gamma_l, length N+1
  std::vector<int> cs;         // cs[l-1] = c_l
  std::vector<int> ds;         // ds[l-1] = d_l
};

// Full Weyl orbit of `highest` by closure under simple reflections. Throws
// NotMinuscule if any orbit weight pairs outside {-1,0,1} with some coroot.
std::vector<Weight> weight_orbit(const RootDatum& d, const Weight& highest);

// The index i* with w_0 Lambda_i = -Lambda_{i*}. Throws InternalInconsistency
// if the image of Lambda_i is not minus a fundamental weight.
int dual_node(const ReducedWord& w, int i);

// All trails from -w_0 Lambda_i down to -s_i Lambda_i inside the orbit of
// Lambda_{i*}. Steps are scanned l = N..1 from -s_i Lambda_i; c_l = 1 is legal
// exactly when the current weight pairs to -1 with h_{i_l} (one-dimensional
// weight spaces make path existence the whole trail condition).
// Throws NotMinuscule for non-minuscule i.
std::vector<Trail> enumerate_trails(const ReducedWord& w, int i);

// exps[l-1] = d_l.
ExpMonomial trail_monomial(const Trail& t);

// Sum of trail monomials; asserts every multiplicity is exactly 1 and throws
// MultiplicityViolation otherwise (distinct trails have distinct monomials).
LaurentPoly minor_via_trails(const ReducedWord& w, int i);

}  // namespace decograph
