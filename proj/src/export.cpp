#include "decograph/export.hpp"

#include <algorithm>
#include <array>

namespace decograph {

using nlohmann::json;

json monomial_json(const ExpMonomial& m) {
  json pairs = json::array();
  for (int p = 0; p < m.slots(); ++p) {
    if (m.exps[p] != 0) pairs.push_back({p + 1, m.exps[p]});
  }
  return pairs;
}

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [mono, coeff] : p.terms) {
    terms.push_back({{"monomial", monomial_json(mono)}, {"coefficient", coeff}});
  }
  return terms;
}

namespace {

// Vertex order used by the JSON export; returns sorted monomials plus the
// map from graph indices to sorted positions.
std::pair<std::vector<ExpMonomial>, std::vector<int>> sorted_vertices(
    const DecorationGraph& dg) {
  std::vector<int> order(dg.vertices.size());
  for (size_t q = 0; q < order.size(); ++q) order[q] = static_cast<int>(q);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return MonoLexGreater{}(dg.vertices[a], dg.vertices[b]);
  });
  std::vector<ExpMonomial> verts;
  std::vector<int> pos(order.size());
  for (size_t q = 0; q < order.size(); ++q) {
    verts.push_back(dg.vertices[order[q]]);
    pos[order[q]] = static_cast<int>(q);
  }
  return {verts, pos};
}

}  // namespace

json graph_json(const DecorationGraph& dg) {
  auto [verts, pos] = sorted_vertices(dg);
  json jverts = json::array();
  for (const auto& v : verts) jverts.push_back(monomial_json(v));
  std::vector<std::array<int, 3>> edges;
  for (const auto& e : dg.edges) edges.push_back({pos[e.src], pos[e.dst], e.label});
  std::sort(edges.begin(), edges.end());
  json jedges = json::array();
  for (const auto& e : edges) jedges.push_back({e[0], e[1], e[2]});
  return json{{"vertices", jverts},
              {"edges", jedges},
              {"source", monomial_json(dg.vertices[dg.source_idx])},
              {"sink", monomial_json(dg.vertices[dg.sink_idx])}};
}

std::string graph_dot(const DecorationGraph& dg) {
  std::string out = "digraph DG {\n  rankdir=TB;\n";
  for (size_t q = 0; q < dg.vertices.size(); ++q) {
    out += "  v" + std::to_string(q) + " [label=\"" + render(dg.vertices[q]) +
           "\"];\n";
  }
  for (const auto& e : dg.edges) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) +
           " [label=\"" + std::to_string(e.label) + "\"];\n";
  }
  return out + "}\n";
}

json cone_json(const Cone& cone) {
  json rows = json::array();
  for (const auto& q : cone.inequalities) {
    json row{{"d", q.d}, {"i", q.i}, {"monomial", q.monomial}};
    if (q.conjectural) row["conjectural"] = true;
    rows.push_back(row);
  }
  return json{{"dim", cone.dim}, {"inequalities", rows}};
}

std::string cone_text(const Cone& cone) {
  std::string out = "dim " + std::to_string(cone.dim) + ", " +
                    std::to_string(cone.inequalities.size()) +
                    " inequalities\n";
  for (const auto& q : cone.inequalities) {
    out += "i=" + std::to_string(q.i);
    if (q.conjectural) out += " (conjectural)";
    out += ": " + render_inequality(q) + "\n";
  }
  return out;
}

json trail_json(const Trail& t) {
  return json{{"cs", t.cs}, {"ds", t.ds}};
}

json crystal_json(const CrystalGraph& g) {
  json jverts = json::array();
  for (const auto& v : g.vertices) jverts.push_back(render(v));
  json jedges = json::array();
  for (const auto& e : g.edges) jedges.push_back({e.src, e.dst, e.color});
  return json{{"vertices", jverts}, {"edges", jedges}};
}

std::string crystal_dot(const CrystalGraph& g) {
  std::string out = "digraph Crystal {\n  rankdir=TB;\n";
  for (size_t q = 0; q < g.vertices.size(); ++q) {
    out += "  v" + std::to_string(q) + " [label=\"" + render(g.vertices[q]) +
           "\"];\n";
  }
  for (const auto& e : g.edges) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) +
           " [label=\"" + std::to_string(e.color) + "\"];\n";
  }
  return out + "}\n";
}

json crystal_compare_json(const CrystalCompareReport& r) {
  json missing = json::array();
  for (const auto& m : r.missing) missing.push_back(render(m));
  return json{{"dg_vertex_count", r.dg_vertex_count},
              {"crystal_vertex_count", r.crystal_vertex_count},
              {"contained", r.contained},
              {"missing", missing},
              {"edges_checked", r.edges_checked},
              {"edges_color_matched", r.edges_color_matched},
              {"colors_consistent", r.colors_consistent},
              {"crystal_lowest", render(r.crystal_lowest)},
              {"dg_equals_crystal_minus_lowest", r.dg_equals_crystal_minus_lowest}};
}

}  // namespace decograph
