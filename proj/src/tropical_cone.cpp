#include "decograph/tropical_cone.hpp"

#include <algorithm>

#include "decograph/decoration_graph.hpp"

namespace decograph {

namespace {

std::vector<std::vector<int>> term_vectors(const LaurentPoly& p) {
  if (p.empty()) {
    throw Error(ErrorCode::EmptyPolynomial, "cannot tropicalize zero");
  }
  std::vector<std::vector<int>> out;
  for (const auto& [mono, coeff] : p.terms) out.push_back(mono.exps);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TropicalForm tropicalize(const LaurentPoly& p) {
  return TropicalForm{term_vectors(p), std::nullopt};
}

TropicalForm tropicalize_ratio(const LaurentPoly& num, const LaurentPoly& den) {
  return TropicalForm{term_vectors(num), term_vectors(den)};
}

std::string render_linear_form(const std::vector<int>& dvec,
                               const std::string& prefix) {
  std::string out;
  for (size_t p = 0; p < dvec.size(); ++p) {
    const int c = dvec[p];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += prefix + std::to_string(p + 1);
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string render_min(const std::vector<std::vector<int>>& terms,
                       const std::string& prefix) {
  if (terms.size() == 1) return render_linear_form(terms[0], prefix);
  std::string out = "min(";
  for (size_t q = 0; q < terms.size(); ++q) {
    if (q) out += ", ";
    out += render_linear_form(terms[q], prefix);
  }
  return out + ")";
}

}  // namespace

std::string render_tropical(const TropicalForm& f, const std::string& prefix) {
  std::string out = render_min(f.min_terms, prefix);
  if (f.subtracted) out += " - " + render_min(*f.subtracted, prefix);
  return out;
}

Cone binfinity_cone(const ReducedWord& w, const ConeOptions& options) {
  const RootDatum& d = w.datum;
  Cone cone;
  cone.dim = w.N();
  for (int i = 1; i <= d.rank; ++i) {
    PolicyMinor minor;
    try {
      minor = minor_by_policy(w, i, BuildLimits{options.max_rounds, options.force});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotMinusculeNotAdapted) {
        throw Error(ErrorCode::IncompleteCover,
                    "node " + std::to_string(i) + " of " + datum_name(d) +
                        " cannot be handled: " + e.message());
      }
      throw;
    }
    for (const auto& m : minor.monomials) {
      cone.inequalities.push_back(
          Inequality{m.exps, i, render(m), minor.conjectural});
    }
  }
  return cone;
}

Containment cone_contains(const Cone& cone, const std::vector<int>& z) {
  if (static_cast<int>(z.size()) != cone.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(cone.dim) + " coordinates, got " +
                    std::to_string(z.size()));
  }
  Containment r{true, {}};
  for (size_t q = 0; q < cone.inequalities.size(); ++q) {
    long long dot = 0;
    const auto& dvec = cone.inequalities[q].d;
    for (int p = 0; p < cone.dim; ++p) dot += static_cast<long long>(dvec[p]) * z[p];
    if (dot < 0) {
      r.contained = false;
      r.violated.push_back(static_cast<int>(q));
    }
  }
  return r;
}

std::string render_inequality(const Inequality& q, const std::string& prefix) {
  return render_linear_form(q.d, prefix) + " >= 0";
}

}  // namespace decograph
