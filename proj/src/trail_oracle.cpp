#include "decograph/trail_oracle.hpp"

#include <algorithm>
#include <map>

namespace decograph {

std::vector<Weight> weight_orbit(const RootDatum& d, const Weight& highest) {
  std::vector<Weight> orbit;
  std::map<Weight, bool> seen;
  orbit.push_back(highest);
  seen[highest] = true;
  for (size_t q = 0; q < orbit.size(); ++q) {
    const Weight w = orbit[q];
    for (int c : w.coords) {
      if (c < -1 || c > 1) {
        throw Error(ErrorCode::NotMinuscule,
                    "orbit weight pairs outside {-1,0,1}");
      }
    }
    for (int i = 1; i <= d.rank; ++i) {
      Weight r = reflect(d, i, w);
      if (!seen[r]) {
        seen[r] = true;
        orbit.push_back(r);
      }
    }
  }
  return orbit;
}

int dual_node(const ReducedWord& w, int i) {
  const Weight img = weyl_act(w.datum, w.letters, fundamental_weight(w.datum, i));
  int star = 0;
  for (int j = 1; j <= w.datum.rank; ++j) {
    const int c = img.coords[j - 1];
    if (c == -1 && star == 0) {
      star = j;
    } else if (c != 0) {
      throw Error(ErrorCode::InternalInconsistency,
                  "w_0 Lambda_i is not minus a fundamental weight");
    }
  }
  if (star == 0) {
    throw Error(ErrorCode::InternalInconsistency,
                "w_0 Lambda_i is not minus a fundamental weight");
  }
  return star;
}

std::vector<Trail> enumerate_trails(const ReducedWord& w, int i) {
  const RootDatum& d = w.datum;
  if (!is_minuscule_node(d, i)) {
    throw Error(ErrorCode::NotMinuscule,
                "node " + std::to_string(i) + " is not minuscule for " +
                    datum_name(d));
  }
  const int N = w.N();
  const int istar = dual_node(w, i);
  const Weight top = fundamental_weight(d, istar);  // = gamma_0 = -w_0 Lambda_i
  const Weight bottom = reflect(d, i, weight_neg(fundamental_weight(d, i)));

  const std::vector<Weight> orbit = weight_orbit(d, top);
  std::map<Weight, int> index;
  for (size_t q = 0; q < orbit.size(); ++q) index[orbit[q]] = static_cast<int>(q);
  const int W = static_cast<int>(orbit.size());

  // reach[l][v]: the state (position l, weight orbit[v]) can finish at gamma_0.
  std::vector<std::vector<char>> reach(N + 1, std::vector<char>(W, 0));
  reach[0][index.at(top)] = 1;
  for (int l = 1; l <= N; ++l) {
    const int node = w.letter(l);
    const Weight alpha = simple_root(d, node);
    for (int v = 0; v < W; ++v) {
      if (reach[l - 1][v]) reach[l][v] = 1;
      if (orbit[v].coords[node - 1] == -1) {
        const int up = index.at(weight_add(orbit[v], alpha));
        if (reach[l - 1][up]) reach[l][v] = 1;
      }
    }
  }

  std::vector<Trail> trails;
  if (!reach[N][index.at(bottom)]) return trails;

  // DFS over positions l = N..1; gammas are filled right to left.
  std::vector<Weight> gammas(N + 1);
  std::vector<int> cs(N, 0);
  gammas[N] = bottom;
  auto emit = [&]() {
    Trail t{gammas, cs, std::vector<int>(N, 0)};
    for (int l = 1; l <= N; ++l) {
      t.ds[l - 1] = cs[l - 1] + gammas[l].coords[w.letter(l) - 1];
    }
    trails.push_back(std::move(t));
  };
  auto dfs = [&](auto&& self, int l) -> void {
    if (l == 0) {
      emit();
      return;
    }
    const int node = w.letter(l);
    const Weight& cur = gammas[l];
    if (reach[l - 1][index.at(cur)]) {
      cs[l - 1] = 0;
      gammas[l - 1] = cur;
      self(self, l - 1);
    }
    if (cur.coords[node - 1] == -1) {
      const Weight up = weight_add(cur, simple_root(d, node));
      if (reach[l - 1][index.at(up)]) {
        cs[l - 1] = 1;
        gammas[l - 1] = up;
        self(self, l - 1);
      }
    }
  };
  dfs(dfs, N);
  return trails;
}

ExpMonomial trail_monomial(const Trail& t) {
  return ExpMonomial{t.ds};
}

LaurentPoly minor_via_trails(const ReducedWord& w, int i) {
  std::vector<ExpMonomial> monos;
  for (const Trail& t : enumerate_trails(w, i)) monos.push_back(trail_monomial(t));
  LaurentPoly p = poly_from_monomials(monos);
  for (const auto& [mono, coeff] : p.terms) {
    if (coeff != 1) {
      throw Error(ErrorCode::MultiplicityViolation,
                  "monomial " + render(mono) + " produced by " +
                      std::to_string(coeff) + " trails");
    }
  }
  return p;
}

}  // namespace decograph
