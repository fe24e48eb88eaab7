#include "decograph/monomial_crystal.hpp"

#include <algorithm>
#include <set>

namespace decograph {

PChoice p_from_word(const ReducedWord& w) {
  PChoice p;
  for (int j = 1; j <= w.datum.rank; ++j) {
    for (int l = j + 1; l <= w.datum.rank; ++l) {
      if (w.datum.a(j, l) == 0) continue;
      int first = 0;
      for (int pos = 1; pos <= w.N() && first == 0; ++pos) {
        const int x = w.letter(pos);
        if (x == j || x == l) first = x;
      }
      const int pjl = first == j ? 1 : 0;
      p.p[{j, l}] = pjl;
      p.p[{l, j}] = 1 - pjl;
    }
  }
  return p;
}

CrystalStats crystal_stats(const CrystalMonomial& y, int i) {
  // Support prefix walk; region a after support point s_a has prefix P_a,
  // region 0 (before all support) has prefix 0.
  std::vector<std::pair<int, int>> support;  // (s, zeta) ascending in s
  for (const auto& [key, zeta] : y.zetas) {
    if (key.second == i) support.push_back({key.first, zeta});
  }
  std::sort(support.begin(), support.end());
  CrystalStats st;
  std::vector<int> prefix{0};
  std::vector<int> starts{0};  // starts[a] = s_a (unused for a = 0)
  for (const auto& [s, zeta] : support) {
    prefix.push_back(prefix.back() + zeta);
    starts.push_back(s);
  }
  st.wt = prefix.back();
  st.phi = *std::max_element(prefix.begin(), prefix.end());
  st.eps = st.phi - st.wt;
  const int regions = static_cast<int>(prefix.size());
  if (st.phi > 0) {
    for (int a = 1; a < regions; ++a) {
      if (prefix[a] == st.phi) {
        st.nf = starts[a];
        break;
      }
    }
  }
  if (st.eps > 0) {
    for (int a = regions - 1; a >= 0; --a) {
      if (prefix[a] == st.phi) {
        st.ne = starts[a + 1] - 1;  // a < regions-1 since the tail misses phi
        break;
      }
    }
  }
  return st;
}

namespace {

void accum(CrystalMonomial& y, int s, int i, int delta) {
  const auto key = std::make_pair(s, i);
  const int v = (y.zetas.count(key) ? y.zetas[key] : 0) + delta;
  if (v == 0) {
    y.zetas.erase(key);
  } else {
    y.zetas[key] = v;
  }
}

CrystalMonomial combine(const CrystalMonomial& y, const CrystalMonomial& a,
                        int sign) {
  CrystalMonomial r = y;
  for (const auto& [key, zeta] : a.zetas) {
    accum(r, key.first, key.second, sign * zeta);
  }
  return r;
}

}  // namespace

CrystalMonomial a_variable(const RootDatum& d, const PChoice& p, int s, int k) {
  CrystalMonomial a;
  accum(a, s, k, 1);
  accum(a, s + 1, k, 1);
  for (int j = 1; j <= d.rank; ++j) {
    if (d.a(j, k) < 0) accum(a, s + p.at(j, k), j, d.a(j, k));
  }
  return a;
}

std::optional<CrystalMonomial> kashiwara_f(const RootDatum& d, const PChoice& p,
                                           const CrystalMonomial& y, int i) {
  const CrystalStats st = crystal_stats(y, i);
  if (st.phi <= 0) return std::nullopt;
  return combine(y, a_variable(d, p, *st.nf, i), -1);
}

std::optional<CrystalMonomial> kashiwara_e(const RootDatum& d, const PChoice& p,
                                           const CrystalMonomial& y, int i) {
  const CrystalStats st = crystal_stats(y, i);
  if (st.eps <= 0) return std::nullopt;
  return combine(y, a_variable(d, p, *st.ne, i), 1);
}

CrystalGraph generate_crystal_graph(const RootDatum& d, const PChoice& p,
                                    const CrystalMonomial& y0, int cap) {
  for (int i = 1; i <= d.rank; ++i) {
    if (crystal_stats(y0, i).eps != 0) {
      throw Error(ErrorCode::HighestWeightViolation,
                  "eps_" + std::to_string(i) + "(" + render(y0) +
                      ") is nonzero");
    }
  }
  CrystalGraph g;
  g.vertices.push_back(y0);
  std::map<CrystalMonomial, int> index;
  index[y0] = 0;
  for (size_t q = 0; q < g.vertices.size(); ++q) {
    for (int i = 1; i <= d.rank; ++i) {
      const auto fy = kashiwara_f(d, p, g.vertices[q], i);
      if (!fy) continue;
      auto [it, fresh] = index.try_emplace(*fy, static_cast<int>(g.vertices.size()));
      if (fresh) {
        if (static_cast<int>(g.vertices.size()) >= cap) {
          throw Error(ErrorCode::CapExceeded,
                      "crystal exceeded " + std::to_string(cap) + " vertices");
        }
        g.vertices.push_back(*fy);
      }
      g.edges.push_back(CrystalGraph::Edge{static_cast<int>(q), it->second, i});
    }
  }
  return g;
}

CrystalMonomial relabel_to_crystal(const ReducedWord& w, const ExpMonomial& m) {
  CrystalMonomial y;
  std::vector<int> occurrences(w.datum.rank + 1, 0);
  for (int pos = 1; pos <= w.N(); ++pos) {
    const int r = w.letter(pos);
    ++occurrences[r];
    if (m.exps[pos - 1] != 0) accum(y, occurrences[r], r, m.exps[pos - 1]);
  }
  return y;
}

CrystalCompareReport compare_dg_crystal(const DecorationGraph& dg,
                                        const PChoice& p, int cap) {
  const ReducedWord& w = dg.word;
  CrystalCompareReport report;
  report.dg_vertex_count = static_cast<int>(dg.vertices.size());

  std::vector<CrystalMonomial> rel;
  rel.reserve(dg.vertices.size());
  for (const auto& v : dg.vertices) rel.push_back(relabel_to_crystal(w, v));

  const CrystalGraph crystal =
      generate_crystal_graph(w.datum, p, rel[dg.source_idx], cap);
  report.crystal_vertex_count = static_cast<int>(crystal.vertices.size());

  std::map<CrystalMonomial, int> cindex;
  for (size_t q = 0; q < crystal.vertices.size(); ++q) {
    cindex[crystal.vertices[q]] = static_cast<int>(q);
  }
  for (size_t q = 0; q < rel.size(); ++q) {
    if (!cindex.count(rel[q])) report.missing.push_back(dg.vertices[q]);
  }
  report.contained = report.missing.empty();

  std::set<std::tuple<int, int, int>> cedges;
  for (const auto& e : crystal.edges) cedges.insert({e.src, e.dst, e.color});
  report.edges_checked = static_cast<int>(dg.edges.size());
  for (const auto& e : dg.edges) {
    const auto s = cindex.find(rel[e.src]);
    const auto t = cindex.find(rel[e.dst]);
    if (s == cindex.end() || t == cindex.end()) continue;
    if (cedges.count({s->second, t->second, w.letter(e.label)})) {
      ++report.edges_color_matched;
    }
  }
  report.colors_consistent = report.edges_color_matched == report.edges_checked;

  std::vector<int> outdeg(crystal.vertices.size(), 0);
  for (const auto& e : crystal.edges) ++outdeg[e.src];
  int lowest = -1;
  for (size_t q = 0; q < crystal.vertices.size(); ++q) {
    if (outdeg[q] == 0) {
      if (lowest != -1) {
        throw Error(ErrorCode::InternalInconsistency,
                    "crystal graph has two lowest vertices");
      }
      lowest = static_cast<int>(q);
    }
  }
  if (lowest == -1) {
    throw Error(ErrorCode::InternalInconsistency, "crystal graph has no lowest vertex");
  }
  report.crystal_lowest = crystal.vertices[lowest];

  std::set<CrystalMonomial> rel_set(rel.begin(), rel.end());
  std::set<CrystalMonomial> crystal_minus_lowest;
  for (size_t q = 0; q < crystal.vertices.size(); ++q) {
    if (static_cast<int>(q) != lowest) crystal_minus_lowest.insert(crystal.vertices[q]);
  }
  report.dg_equals_crystal_minus_lowest = rel_set == crystal_minus_lowest;
  return report;
}

std::string render(const CrystalMonomial& y) {
  std::string out;
  for (const auto& [key, zeta] : y.zetas) {
    if (!out.empty()) out += "*";
    out += "Y[" + std::to_string(key.first) + "," + std::to_string(key.second) + "]";
    if (zeta != 1) out += "^" + std::to_string(zeta);
  }
  return out.empty() ? "1" : out;
}

}  // namespace decograph
