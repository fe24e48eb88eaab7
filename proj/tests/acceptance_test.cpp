// Acceptance suite for the decoration-minor library. Each numbered criterion
// prints exactly one PASS/FAIL line; the process exits nonzero if any fails.
//
//   1  A3 word (1,2,3,2,1,2): all three minors and the 7-inequality cone.
//   2  A4 word (4,3,2,3,1,2,4,3,2,4): labeled graphs, four minors, 14 cone rows.
//   3  D4 word (1,2,3,4,2,1,4,3,2,3,4,2): 21-vertex graph, 3-chains, 28 cone rows.
//   4  Repeated/alternating words (G2 both orders, B3, C3): monomial sets.
//   5  Randomized battery: graph vertex set == trail-oracle monomial set.
//   6  Structural invariants on every graph built for criterion 5.
//   7  Crystal containment: graph == monomial crystal minus its lowest vertex.
//   8  Tropicalized ratio contract.
//
// Wall-clock budgets are pinned as constants below; exceeding one fails the
// criterion even when all value checks pass.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "decograph/decoration_graph.hpp"
#include "decograph/laurent_algebra.hpp"
#include "decograph/monomial_crystal.hpp"
#include "decograph/root_data.hpp"
#include "decograph/tropical_cone.hpp"
#include "decograph/verify.hpp"
#include "decograph/word_engine.hpp"

namespace {

using nlohmann::json;
using namespace decograph;

constexpr double kBudgetA3Seconds = 0.1;
constexpr double kBudgetA4Seconds = 0.1;
constexpr double kBudgetD4Seconds = 0.5;
constexpr double kBudgetPerRepeatedWordSeconds = 0.1;
constexpr double kBudgetOracleBatterySeconds = 60.0;
constexpr double kBudgetCrystalSeconds = 1.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string ms_vs_budget(double seconds, double budget) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f ms < %.0f ms", seconds * 1e3, budget * 1e3);
  return buf;
}

struct Fixture {
  json raw;
  ReducedWord word;
};

Fixture load_fixture(const std::string& name) {
  const std::string path =
      std::string(DECOGRAPH_FIXTURE_DIR) + "/" + name + ".json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  Fixture f;
  in >> f.raw;
  const RootDatum d = parse_datum(f.raw.at("datum").get<std::string>());
  f.word = validate_reduced_w0(d, f.raw.at("word").get<std::vector<int>>());
  return f;
}

std::set<std::vector<int>> exp_set(const std::vector<ExpMonomial>& monos) {
  std::set<std::vector<int>> out;
  for (const auto& m : monos) out.insert(m.exps);
  return out;
}

std::set<std::vector<int>> poly_exp_set(const LaurentPoly& p) {
  std::set<std::vector<int>> out;
  for (const auto& [m, coeff] : p.terms) out.insert(m.exps);
  return out;
}

// Checks every "minors" entry: "exact" demands full polynomial equality and an
// exactness claim from the policy; "monomial-set" demands set equality and an
// honest coefficients_exact = false.
void replay_minors(const Fixture& f, std::vector<std::string>& failures) {
  if (!f.raw.contains("minors")) return;
  const int n = f.word.N();
  for (const auto& entry : f.raw.at("minors")) {
    const int i = entry.at("i").get<int>();
    const std::string tag = "minor i=" + std::to_string(i);
    const LaurentPoly expected =
        parse_poly(entry.at("poly").get<std::string>(), n);
    const PolicyMinor pm = minor_by_policy(f.word, i);
    if (entry.at("match").get<std::string>() == "exact") {
      if (!pm.coefficients_exact) {
        failures.push_back(tag + ": coefficients reported inexact");
        continue;
      }
      const LaurentPoly got = poly_from_monomials(pm.monomials);
      if (!(got == expected)) {
        failures.push_back(tag + ": got " + render(got) + " expected " +
                           render(expected));
      }
    } else {
      if (pm.coefficients_exact) {
        failures.push_back(tag + ": exactness claimed beyond the covered scope");
      }
      if (exp_set(pm.monomials) != poly_exp_set(expected)) {
        failures.push_back(tag + ": monomial set mismatch (got " +
                           std::to_string(pm.monomials.size()) +
                           " monomials, expected " +
                           std::to_string(expected.terms.size()) + ")");
      }
    }
  }
}

// Checks every "graphs" entry: vertex set, source, sink, and (when stored)
// the exact edge multiset (labeled triples or unlabeled pairs) or edge count.
void replay_graphs(const Fixture& f, std::vector<std::string>& failures) {
  if (!f.raw.contains("graphs")) return;
  const int n = f.word.N();
  for (const auto& entry : f.raw.at("graphs")) {
    const int i = entry.at("i").get<int>();
    const std::string tag = "graph i=" + std::to_string(i);
    const DecorationGraph dg = build_decoration_graph(f.word, i);
    std::vector<ExpMonomial> expected_vertices;
    for (const auto& s : entry.at("vertices")) {
      expected_vertices.push_back(parse_monomial(s.get<std::string>(), n));
    }
    if (dg.vertices.size() != expected_vertices.size()) {
      failures.push_back(tag + ": vertex count got " +
                         std::to_string(dg.vertices.size()) + " expected " +
                         std::to_string(expected_vertices.size()));
    }
    if (exp_set(dg.vertices) != exp_set(expected_vertices)) {
      failures.push_back(tag + ": vertex set mismatch");
    }
    if (entry.contains("source")) {
      const ExpMonomial want =
          parse_monomial(entry.at("source").get<std::string>(), n);
      if (!(dg.vertices[dg.source_idx] == want)) {
        failures.push_back(tag + ": source is " +
                           render(dg.vertices[dg.source_idx]) + " expected " +
                           render(want));
      }
    }
    if (entry.contains("sink")) {
      const ExpMonomial want =
          parse_monomial(entry.at("sink").get<std::string>(), n);
      if (!(dg.vertices[dg.sink_idx] == want)) {
        failures.push_back(tag + ": sink is " + render(dg.vertices[dg.sink_idx]) +
                           " expected " + render(want));
      }
    }
    if (entry.contains("edge_count") &&
        static_cast<int>(dg.edges.size()) != entry.at("edge_count").get<int>()) {
      failures.push_back(tag + ": edge count got " +
                         std::to_string(dg.edges.size()) + " expected " +
                         std::to_string(entry.at("edge_count").get<int>()));
    }
    if (entry.contains("edges")) {
      const auto& rows = entry.at("edges");
      const bool labeled = !rows.empty() && rows.front().size() == 3;
      if (labeled) {
        using Edge = std::tuple<std::vector<int>, std::vector<int>, int>;
        std::multiset<Edge> got, want;
        for (const auto& e : dg.edges) {
          got.insert({dg.vertices[e.src].exps, dg.vertices[e.dst].exps, e.label});
        }
        for (const auto& row : rows) {
          want.insert({parse_monomial(row[0].get<std::string>(), n).exps,
                       parse_monomial(row[1].get<std::string>(), n).exps,
                       row[2].get<int>()});
        }
        if (got != want) failures.push_back(tag + ": labeled edge set mismatch");
      } else {
        using Edge = std::pair<std::vector<int>, std::vector<int>>;
        std::multiset<Edge> got, want;
        for (const auto& e : dg.edges) {
          got.insert({dg.vertices[e.src].exps, dg.vertices[e.dst].exps});
        }
        for (const auto& row : rows) {
          want.insert({parse_monomial(row[0].get<std::string>(), n).exps,
                       parse_monomial(row[1].get<std::string>(), n).exps});
        }
        if (got != want) failures.push_back(tag + ": edge set mismatch");
      }
    }
  }
}

// Checks the "cone" block: dimension and the exact multiset of coefficient
// vectors (one inequality d.z >= 0 per stored row).
void replay_cone(const Fixture& f, std::vector<std::string>& failures) {
  if (!f.raw.contains("cone")) return;
  const auto& block = f.raw.at("cone");
  const Cone cone = binfinity_cone(f.word);
  if (cone.dim != block.at("dim").get<int>()) {
    failures.push_back("cone: dim got " + std::to_string(cone.dim) +
                       " expected " + std::to_string(block.at("dim").get<int>()));
  }
  std::multiset<std::vector<int>> got, want;
  for (const auto& q : cone.inequalities) got.insert(q.d);
  for (const auto& row : block.at("inequalities")) {
    want.insert(row.get<std::vector<int>>());
  }
  if (got.size() != want.size()) {
    failures.push_back("cone: " + std::to_string(got.size()) +
                       " inequalities, expected " + std::to_string(want.size()));
  }
  if (got != want) failures.push_back("cone: inequality set mismatch");
}

// Checks "p_ones" (sign choices forced to 1 by the word) and the
// "crystal_compare" block field by field.
void replay_crystal(const Fixture& f, std::vector<std::string>& failures) {
  const PChoice p = p_from_word(f.word);
  if (f.raw.contains("p_ones")) {
    for (const auto& row : f.raw.at("p_ones")) {
      const int j = row[0].get<int>();
      const int l = row[1].get<int>();
      if (p.at(j, l) != 1) {
        failures.push_back("p[" + std::to_string(j) + "," + std::to_string(l) +
                           "] != 1");
      }
    }
  }
  if (!f.raw.contains("crystal_compare")) return;
  const auto& block = f.raw.at("crystal_compare");
  const int i = block.at("i").get<int>();
  const std::string tag = "crystal i=" + std::to_string(i);
  const DecorationGraph dg = build_decoration_graph(f.word, i);
  const CrystalCompareReport rep = compare_dg_crystal(dg, p);
  if (rep.dg_vertex_count != block.at("dg_vertex_count").get<int>()) {
    failures.push_back(tag + ": graph vertex count " +
                       std::to_string(rep.dg_vertex_count));
  }
  if (rep.crystal_vertex_count != block.at("crystal_vertex_count").get<int>()) {
    failures.push_back(tag + ": crystal vertex count " +
                       std::to_string(rep.crystal_vertex_count));
  }
  if (rep.contained != block.at("contained").get<bool>()) {
    failures.push_back(tag + ": containment is " +
                       std::string(rep.contained ? "true" : "false") + " (" +
                       std::to_string(rep.missing.size()) + " missing)");
  }
  if (rep.colors_consistent != block.at("colors_consistent").get<bool>()) {
    failures.push_back(tag + ": edge colors matched " +
                       std::to_string(rep.edges_color_matched) + "/" +
                       std::to_string(rep.edges_checked));
  }
  if (render(rep.crystal_lowest) != block.at("crystal_lowest").get<std::string>()) {
    failures.push_back(tag + ": crystal lowest is " + render(rep.crystal_lowest));
  }
  if (rep.dg_equals_crystal_minus_lowest !=
      block.at("dg_equals_crystal_minus_lowest").get<bool>()) {
    failures.push_back(tag + ": graph == crystal minus lowest is " +
                       std::string(rep.dg_equals_crystal_minus_lowest ? "true"
                                                                      : "false"));
  }
}

std::string join_first(const std::vector<std::string>& items, size_t limit) {
  std::string out;
  for (size_t k = 0; k < items.size() && k < limit; ++k) {
    if (!out.empty()) out += "; ";
    out += items[k];
  }
  if (items.size() > limit) {
    out += "; +" + std::to_string(items.size() - limit) + " more";
  }
  return out;
}

int g_failed_criteria = 0;

void report(int criterion, bool pass, const std::string& text) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              text.c_str());
  if (!pass) ++g_failed_criteria;
}

// Runs `body` (which fills `failures` and returns a success summary); prints
// one line covering value checks, the time budget, and any thrown exception.
void run_criterion(int criterion, double budget_seconds,
                   const std::function<std::string(std::vector<std::string>&)>& body) {
  std::vector<std::string> failures;
  std::string summary;
  const auto t0 = Clock::now();
  try {
    summary = body(failures);
  } catch (const std::exception& e) {
    failures.push_back(std::string("exception: ") + e.what());
  }
  const double dt = seconds_since(t0);
  if (dt >= budget_seconds) {
    failures.push_back("over budget: " + ms_vs_budget(dt, budget_seconds));
  }
  if (failures.empty()) {
    report(criterion, true, summary + " (" + ms_vs_budget(dt, budget_seconds) + ")");
  } else {
    report(criterion, false, join_first(failures, 3));
  }
}

}  // namespace

int main() {
  run_criterion(1, kBudgetA3Seconds, [](std::vector<std::string>& failures) {
    const Fixture f = load_fixture("a3-basic");
    replay_minors(f, failures);
    replay_cone(f, failures);
    return std::string(
        "A3 (1,2,3,2,1,2): three exact minors and the 7-inequality cone");
  });

  run_criterion(2, kBudgetA4Seconds, [](std::vector<std::string>& failures) {
    const Fixture f = load_fixture("a4-main");
    replay_minors(f, failures);
    replay_graphs(f, failures);
    replay_cone(f, failures);
    return std::string(
        "A4 (4,3,2,3,1,2,4,3,2,4): labeled 7-edge graph, four exact minors, "
        "14-inequality cone");
  });

  run_criterion(3, kBudgetD4Seconds, [](std::vector<std::string>& failures) {
    const Fixture f = load_fixture("d4-main");
    replay_minors(f, failures);
    replay_graphs(f, failures);
    replay_cone(f, failures);
    return std::string(
        "D4 (1,2,3,4,2,1,4,3,2,3,4,2): 21-vertex graph, both 3-chains, "
        "28-inequality cone");
  });

  // Criterion 4 carries a per-fixture budget, so each file is timed alone.
  {
    std::vector<std::string> failures;
    double worst = 0.0;
    for (const char* name :
         {"g2-node1", "g2-node2", "b3-repeated", "c3-repeated"}) {
      const auto t0 = Clock::now();
      try {
        const Fixture f = load_fixture(name);
        std::vector<std::string> local;
        replay_minors(f, local);
        for (const auto& item : local) {
          failures.push_back(std::string(name) + " " + item);
        }
      } catch (const std::exception& e) {
        failures.push_back(std::string(name) + " exception: " + e.what());
      }
      const double dt = seconds_since(t0);
      worst = std::max(worst, dt);
      if (dt >= kBudgetPerRepeatedWordSeconds) {
        failures.push_back(std::string(name) + " over budget: " +
                           ms_vs_budget(dt, kBudgetPerRepeatedWordSeconds));
      }
    }
    if (failures.empty()) {
      report(4, true,
             "repeated/alternating words (G2 both orders, B3, C3): monomial "
             "sets match (worst " +
                 ms_vs_budget(worst, kBudgetPerRepeatedWordSeconds) + ")");
    } else {
      report(4, false, join_first(failures, 3));
    }
  }

  // Criteria 5 and 6 share one battery of randomized instances.
  {
    struct BatterySpec {
      const char* datum;
      std::vector<int> nodes;
      int words;
    };
    const std::vector<BatterySpec> battery = {
        {"A2", {1, 2}, 50},    {"A3", {1, 2, 3}, 50}, {"A4", {1, 2, 3, 4}, 50},
        {"B3", {3}, 50},       {"C3", {1}, 50},       {"D4", {1, 3, 4}, 50},
        {"E6", {1, 5}, 5},
    };
    int instances = 0;
    int graphs_checked = 0;
    int invariant_violations = 0;
    std::vector<std::string> oracle_failures;
    std::vector<std::string> invariant_failures;
    const auto t0 = Clock::now();
    try {
      for (size_t b = 0; b < battery.size(); ++b) {
        const RootDatum d = parse_datum(battery[b].datum);
        const std::vector<int> start = canonical_word(d);
        const int moves = 3 * static_cast<int>(start.size());
        for (int q = 0; q < battery[b].words; ++q) {
          const uint64_t seed = 20240817ull + 1000ull * b + static_cast<uint64_t>(q);
          const ReducedWord w =
              validate_reduced_w0(d, random_word(d, start, moves, seed));
          for (int i : battery[b].nodes) {
            ++instances;
            const std::string tag = std::string(battery[b].datum) + " word " +
                                    word_to_string(w.letters) + " i=" +
                                    std::to_string(i);
            const VerifyReport rep = verify_instance(w, i);
            if (!rep.ok) {
              oracle_failures.push_back(tag + ": " + join_first(rep.failures, 1));
            }
            const DecorationGraph dg = build_decoration_graph(w, i);
            ++graphs_checked;
            const auto violations = graph_invariant_violations(dg);
            if (!violations.empty()) {
              invariant_violations += static_cast<int>(violations.size());
              invariant_failures.push_back(tag + ": " +
                                           join_first(violations, 1));
            }
          }
        }
      }
    } catch (const std::exception& e) {
      oracle_failures.push_back(std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    std::vector<std::string> c5 = oracle_failures;
    if (dt >= kBudgetOracleBatterySeconds) {
      c5.push_back("over budget: " + ms_vs_budget(dt, kBudgetOracleBatterySeconds));
    }
    if (c5.empty()) {
      report(5, true,
             std::to_string(instances) + "/" + std::to_string(instances) +
                 " randomized instances: graph vertex set == trail-oracle "
                 "monomials, all coefficients 1 (" +
                 ms_vs_budget(dt, kBudgetOracleBatterySeconds) + ")");
    } else {
      report(5, false, join_first(c5, 3));
    }
    if (invariant_failures.empty()) {
      report(6, true,
             "0 invariant violations across " + std::to_string(graphs_checked) +
                 " decoration graphs (source, sink, DAG, diamonds, exponent "
                 "bounds)");
    } else {
      report(6, false,
             std::to_string(invariant_violations) + " violations: " +
                 join_first(invariant_failures, 3));
    }
  }

  run_criterion(7, kBudgetCrystalSeconds, [](std::vector<std::string>& failures) {
    {
      const Fixture f = load_fixture("a4-crystal");
      std::vector<std::string> local;
      replay_graphs(f, local);
      replay_crystal(f, local);
      for (const auto& item : local) failures.push_back("a4-crystal " + item);
    }
    for (const char* name : {"g2-node1", "g2-node2"}) {
      const Fixture f = load_fixture(name);
      std::vector<std::string> local;
      replay_crystal(f, local);
      for (const auto& item : local) {
        failures.push_back(std::string(name) + " " + item);
      }
    }
    return std::string(
        "graph == monomial crystal minus lowest vertex for all three stored "
        "comparisons");
  });

  run_criterion(8, kBudgetA3Seconds, [](std::vector<std::string>& failures) {
    const LaurentPoly num = parse_poly("x1^2 + 2*x2*x3 + x3^2", 3, "x");
    const LaurentPoly den = parse_poly("x1 + x2", 3, "x");
    const TropicalForm form = tropicalize_ratio(num, den);
    const std::vector<std::vector<int>> want_min = {{2, 0, 0}, {0, 1, 1}, {0, 0, 2}};
    const std::vector<std::vector<int>> want_sub = {{1, 0, 0}, {0, 1, 0}};
    if (form.min_terms != want_min) failures.push_back("numerator rows mismatch");
    if (!form.subtracted || *form.subtracted != want_sub) {
      failures.push_back("denominator rows mismatch");
    }
    const std::string rendered = render_tropical(form);
    const std::string want = "min(2*z1, z2 + z3, 2*z3) - min(z1, z2)";
    if (rendered != want) {
      failures.push_back("rendered \"" + rendered + "\" expected \"" + want + "\"");
    }
    return std::string("(x1^2 + 2*x2*x3 + x3^2)/(x1 + x2) tropicalizes to " + want);
  });

  if (g_failed_criteria == 0) {
    std::printf("all 8 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failed_criteria);
  return 1;
}
