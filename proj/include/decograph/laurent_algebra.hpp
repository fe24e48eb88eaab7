#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "decograph/errors.hpp"

namespace decograph {

// Laurent monomial in t_1..t_N as a dense exponent vector; slot m is exps[m-1].
// The zero vector is the monomial 1.
struct ExpMonomial {
  std::vector<int> exps;

  bool operator==(const ExpMonomial&) const = default;
  int slots() const { return static_cast<int>(exps.size()); }
  bool is_one() const;
};

// Descending lexicographic term order; also the render order.
struct MonoLexGreater {
  bool operator()(const ExpMonomial& a, const ExpMonomial& b) const {
    return a.exps > b.exps;
  }
};

struct ExpMonomialHash {
  size_t operator()(const ExpMonomial& m) const {
    uint64_t h = 1469598103934665603ull;
    for (int e : m.exps) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(e));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// exps_m + sign * exps_a componentwise; sign is +1 or -1. Throws SlotMismatch.
ExpMonomial mono_combine(const ExpMonomial& m, const ExpMonomial& a, int sign);

// Laurent polynomial with positive integer coefficients. Keys are unique;
// no zero coefficients are ever stored.
struct LaurentPoly {
  std::map<ExpMonomial, long long, MonoLexGreater> terms;

  bool operator==(const LaurentPoly&) const = default;
  bool empty() const { return terms.empty(); }
};

// Coefficient of each monomial = its multiplicity in the list. Throws SlotMismatch
// on inconsistent slot counts.
LaurentPoly poly_from_monomials(const std::vector<ExpMonomial>& monos);

// "t5*t6^-1"; the zero exponent vector renders as "1".
std::string render(const ExpMonomial& m, const std::string& prefix = "t");

// Terms joined with " + " in descending lexicographic exponent order;
// coefficients > 1 render as "2*...". The zero polynomial renders as "0".
std::string render(const LaurentPoly& p, const std::string& prefix = "t");

// Inverses of render. Throw ParseError.
ExpMonomial parse_monomial(const std::string& text, int slots,
                           const std::string& prefix = "t");
LaurentPoly parse_poly(const std::string& text, int slots,
                       const std::string& prefix = "t");

}  // namespace decograph
