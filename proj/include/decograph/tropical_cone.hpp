#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decograph/laurent_algebra.hpp"
#include "decograph/word_engine.hpp"

namespace decograph {

// Min-plus image of a positive Laurent polynomial (or ratio): the minimum of
// the linear forms d.z over the exponent vectors d, minus the analogous
// minimum for a denominator when present. Coefficients are discarded.
struct TropicalForm {
  std::vector<std::vector<int>> min_terms;  // deduplicated, lex-descending
  std::optional<std::vector<std::vector<int>>> subtracted;

  bool operator==(const TropicalForm&) const = default;
};

TropicalForm tropicalize(const LaurentPoly& p);  // throws EmptyPolynomial
TropicalForm tropicalize_ratio(const LaurentPoly& num, const LaurentPoly& den);

// "min(2*z1, z2 + z3, 2*z3) - min(z1, z2)"; a single form skips the min().
std::string render_tropical(const TropicalForm& f,
                            const std::string& prefix = "z");

struct Inequality {
  std::vector<int> d;  // meaning d.z >= 0
  int i;               // the node whose minor contributed this monomial
  std::string monomial;
  bool conjectural;  // built beyond the proven minuscule scope
};

struct Cone {
  int dim = 0;
  std::vector<Inequality> inequalities;
};

struct ConeOptions {
  bool force = false;
  int max_rounds = 0;
};

// One inequality per monomial of every half-decoration minor. Per node i:
// minuscule nodes run the graph algorithm; i_N = i contributes the single
// monomial t_N (highest and lowest term coincide); other nodes require an
// adapted word (or force) and are tagged conjectural. Throws IncompleteCover
// when a node is out of scope and force is off.
Cone binfinity_cone(const ReducedWord& w, const ConeOptions& options = {});

struct Containment {
  bool contained;
  std::vector<int> violated;  // indices into cone.inequalities
};
Containment cone_contains(const Cone& cone, const std::vector<int>& z);

std::string render_inequality(const Inequality& q, const std::string& prefix = "z");
std::string render_linear_form(const std::vector<int>& dvec,
                               const std::string& prefix = "z");

}  // namespace decograph
