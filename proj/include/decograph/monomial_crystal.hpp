#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decograph/decoration_graph.hpp"
#include "decograph/root_data.hpp"

namespace decograph {

// Laurent monomial in doubly-indexed variables Y_{s,i}; only nonzero
// exponents are stored. The empty map is the monomial 1.
struct CrystalMonomial {
  std::map<std::pair<int, int>, int> zetas;  // (s, i) -> zeta_{s,i} != 0

  bool operator==(const CrystalMonomial&) const = default;
  bool operator<(const CrystalMonomial& o) const { return zetas < o.zetas; }
};

// Sign convention choice: p_{j,k} in {0,1} with p_{j,k} + p_{k,j} = 1 for
// every connected pair.
struct PChoice {
  std::map<std::pair<int, int>, int> p;

  int at(int j, int k) const { return p.at({j, k}); }
};

// p_{j,l} = 1 exactly when the {j,l}-subword of the word starts with j.
PChoice p_from_word(const ReducedWord& w);

struct CrystalStats {
  int wt = 0;   // sum of zeta_{s,i} over s
  int phi = 0;  // max prefix sum (the empty prefix contributes 0)
  int eps = 0;  // phi - wt
  std::optional<int> nf;  // min argmax prefix; present iff phi > 0
  std::optional<int> ne;  // max argmax prefix; present iff eps > 0
};
CrystalStats crystal_stats(const CrystalMonomial& y, int i);

// A_{s,k} = Y_{s,k} Y_{s+1,k} prod_{j: a_{j,k}<0} Y_{s+p_{j,k},j}^{a_{j,k}}.
CrystalMonomial a_variable(const RootDatum& d, const PChoice& p, int s, int k);

// Kashiwara operators; nullopt encodes 0.
std::optional<CrystalMonomial> kashiwara_f(const RootDatum& d, const PChoice& p,
                                           const CrystalMonomial& y, int i);
std::optional<CrystalMonomial> kashiwara_e(const RootDatum& d, const PChoice& p,
                                           const CrystalMonomial& y, int i);

struct CrystalGraph {
  struct Edge {
    int src, dst;
    int color;  // node i with dst = f_i(src)
  };
  std::vector<CrystalMonomial> vertices;  // breadth-first from the top
  std::vector<Edge> edges;
};

// Breadth-first closure of y0 under all f_i. Requires eps_i(y0) = 0 for all i
// (HighestWeightViolation otherwise); throws CapExceeded past `cap` vertices.
CrystalGraph generate_crystal_graph(const RootDatum& d, const PChoice& p,
                                    const CrystalMonomial& y0, int cap);

// Position m of the word maps to Y_{s,r} with r = i_m and s = the occurrence
// count of r in positions 1..m.
CrystalMonomial relabel_to_crystal(const ReducedWord& w, const ExpMonomial& m);

struct CrystalCompareReport {
  int dg_vertex_count = 0;
  int crystal_vertex_count = 0;
  std::vector<ExpMonomial> missing;  // graph vertices absent from the crystal
  bool contained = false;
  int edges_checked = 0;
  int edges_color_matched = 0;
  bool colors_consistent = false;
  CrystalMonomial crystal_lowest;  // the unique crystal vertex without f-edges
  bool dg_equals_crystal_minus_lowest = false;
};

// Relabels every graph vertex into Y-variables, generates the crystal of the
// relabeled source (a single variable, hence a highest monomial), and reports
// monomial containment and edge-color agreement separately.
CrystalCompareReport compare_dg_crystal(const DecorationGraph& dg,
                                        const PChoice& p, int cap = 100000);

std::string render(const CrystalMonomial& y);  // "Y[1,1]*Y[2,1]^-1"

}  // namespace decograph
