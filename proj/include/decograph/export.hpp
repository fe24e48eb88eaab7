#pragma once

#include <nlohmann/json.hpp>

#include "decograph/decoration_graph.hpp"
#include "decograph/laurent_algebra.hpp"
#include "decograph/monomial_crystal.hpp"
#include "decograph/trail_oracle.hpp"
#include "decograph/tropical_cone.hpp"

namespace decograph {

// Sorted [slot, exponent] pairs, zeros omitted.
nlohmann::json monomial_json(const ExpMonomial& m);

// {"monomial": pairs, "coefficient": c} per term, render order.
nlohmann::json poly_json(const LaurentPoly& p);

// {"vertices": [...], "edges": [[src,dst,label],...], "source":..., "sink":...}
// Vertices lex-descending; edge indices refer to the sorted order.
nlohmann::json graph_json(const DecorationGraph& dg);
std::string graph_dot(const DecorationGraph& dg);

// {"dim": N, "inequalities": [{"d": [...], "i": i, "monomial": "..."}]}
nlohmann::json cone_json(const Cone& cone);
std::string cone_text(const Cone& cone);

nlohmann::json trail_json(const Trail& t);

nlohmann::json crystal_json(const CrystalGraph& g);
std::string crystal_dot(const CrystalGraph& g);

nlohmann::json crystal_compare_json(const CrystalCompareReport& r);

}  // namespace decograph
