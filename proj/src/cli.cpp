#include "decograph/cli.hpp"

#include <cstdlib>

#include "decograph/export.hpp"
#include "decograph/trail_oracle.hpp"
#include "decograph/verify.hpp"

namespace decograph {

namespace {

using nlohmann::json;

int effective_max_rounds(const JobSpec& job) {
  if (job.max_rounds > 0) return job.max_rounds;
  if (const char* env = std::getenv("DECOGRAPH_MAX_ROUNDS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;
}

int require_i(const JobSpec& job, const RootDatum& d) {
  if (job.i < 1 || job.i > d.rank) {
    throw Error(ErrorCode::BadJobSpec,
                "command \"" + job.command + "\" needs --i in [1," +
                    std::to_string(d.rank) + "]");
  }
  return job.i;
}

void require_format(const JobSpec& job, const std::vector<std::string>& allowed) {
  for (const auto& f : allowed) {
    if (job.format == f) return;
  }
  throw Error(ErrorCode::BadJobSpec,
              "format \"" + job.format + "\" not supported by " + job.command);
}

ReducedWord resolve_word(const JobSpec& job, const RootDatum& d) {
  const std::vector<int> letters =
      job.word.empty() ? canonical_word(d) : parse_word(job.word);
  return validate_reduced_w0(d, letters);
}

int default_moves(const JobSpec& job, const ReducedWord& w) {
  return job.moves > 0 ? job.moves : 3 * w.N();
}

std::string run_minor(const JobSpec& job, const ReducedWord& w) {
  const int i = require_i(job, w.datum);
  const PolicyMinor minor = minor_by_policy(
      w, i, BuildLimits{effective_max_rounds(job), job.force});
  const LaurentPoly poly = poly_from_monomials(minor.monomials);
  if (job.format == "json") {
    json out{{"type", datum_name(w.datum)},
             {"word", w.letters},
             {"i", i},
             {"minor", render(poly)},
             {"terms", poly_json(poly)},
             {"coefficients_exact", minor.coefficients_exact},
             {"conjectural", minor.conjectural}};
    return out.dump(2) + "\n";
  }
  std::string out = render(poly) + "\n";
  if (!minor.coefficients_exact) {
    out += "note: monomial set only; coefficients are not determined by the "
           "graph for a non-minuscule node\n";
  }
  return out;
}

std::string run_graph(const JobSpec& job, const ReducedWord& w) {
  const int i = require_i(job, w.datum);
  const DecorationGraph dg = build_decoration_graph(
      w, i, BuildLimits{effective_max_rounds(job), job.force});
  if (job.format == "dot") return graph_dot(dg);
  if (job.format == "json") return graph_json(dg).dump(2) + "\n";
  const GraphSummary s = graph_summary(dg);
  std::string out;
  out += "vertices: " + std::to_string(s.vertex_count) + "\n";
  out += "edges: " + std::to_string(s.edge_count) + "\n";
  out += "source: " + render(s.source) + "\n";
  out += "sink: " + render(s.sink) + "\n";
  out += "rounds: " + std::to_string(s.rounds) + "\n";
  out += std::string("dag: ") + (s.is_dag ? "yes" : "no") + "\n";
  for (const auto& e : dg.edges) {
    out += render(dg.vertices[e.src]) + " -> " + render(dg.vertices[e.dst]) +
           "  [" + std::to_string(e.label) + "]\n";
  }
  return out;
}

std::string run_cone(const JobSpec& job, const ReducedWord& w) {
  const Cone cone =
      binfinity_cone(w, ConeOptions{job.force, effective_max_rounds(job)});
  if (job.format == "json") return cone_json(cone).dump(2) + "\n";
  return cone_text(cone);
}

std::string run_verify(const JobSpec& job, const ReducedWord& w, int* exit_code) {
  const int i = require_i(job, w.datum);
  if (!is_minuscule_node(w.datum, i)) {
    throw Error(ErrorCode::NotMinuscule,
                "verify needs a minuscule node; " + std::to_string(i) +
                    " is not minuscule for " + datum_name(w.datum));
  }
  const int max_rounds = effective_max_rounds(job);
  std::string out;
  json jwords = json::array();
  bool all_ok = true;

  auto check_one = [&](const ReducedWord& word, const std::string& tag) {
    const VerifyReport report = verify_instance(word, i, max_rounds);
    if (report.ok) {
      out += "OK" + tag + ": " + std::to_string(report.monomial_count) +
             " monomials, DG == oracle\n";
    } else {
      all_ok = false;
      out += "MISMATCH" + tag + " for word " + word_to_string(word.letters) + "\n";
      for (const auto& f : report.failures) out += "  " + f + "\n";
    }
    jwords.push_back({{"word", word.letters},
                      {"ok", report.ok},
                      {"monomials", report.monomial_count},
                      {"failures", report.failures}});
    return report.ok;
  };

  if (job.count > 0) {
    const std::vector<int>& start = w.letters;
    const int moves = default_moves(job, w);
    int done = 0;
    for (int q = 0; q < job.count; ++q) {
      const ReducedWord word = validate_reduced_w0(
          w.datum, random_word(w.datum, start, moves, job.seed + q));
      if (!check_one(word, " " + std::to_string(q + 1) + "/" +
                               std::to_string(job.count))) {
        break;  // fail fast; the offending word is already reported
      }
      ++done;
    }
    if (all_ok) {
      out += "OK: " + std::to_string(done) + "/" + std::to_string(job.count) +
             " words verified\n";
    }
  } else {
    check_one(w, "");
  }
  if (!all_ok) *exit_code = 4;
  if (job.format == "json") {
    return json{{"type", datum_name(w.datum)},
                {"i", i},
                {"ok", all_ok},
                {"results", jwords}}
               .dump(2) +
           "\n";
  }
  return out;
}

std::string run_crystal_compare(const JobSpec& job, const ReducedWord& w,
                                int* exit_code) {
  const int i = require_i(job, w.datum);
  const DecorationGraph dg = build_decoration_graph(
      w, i, BuildLimits{effective_max_rounds(job), job.force});
  const CrystalCompareReport report = compare_dg_crystal(dg, p_from_word(w));
  if (!report.contained) *exit_code = 4;
  if (job.format == "json") return crystal_compare_json(report).dump(2) + "\n";
  std::string out;
  out += "graph vertices: " + std::to_string(report.dg_vertex_count) + "\n";
  out += "crystal vertices: " + std::to_string(report.crystal_vertex_count) + "\n";
  out += std::string("containment: ") + (report.contained ? "OK" : "FAILED") +
         " (" +
         std::to_string(report.dg_vertex_count -
                        static_cast<int>(report.missing.size())) +
         "/" + std::to_string(report.dg_vertex_count) + " found)\n";
  for (const auto& m : report.missing) out += "  missing: " + render(m) + "\n";
  out += "edge colors: " + std::to_string(report.edges_color_matched) + "/" +
         std::to_string(report.edges_checked) + " matched\n";
  out += "crystal lowest: " + render(report.crystal_lowest) + "\n";
  out += std::string("graph == crystal minus lowest: ") +
         (report.dg_equals_crystal_minus_lowest ? "yes" : "no") + "\n";
  return out;
}

std::string run_random_words(const JobSpec& job, const ReducedWord& w) {
  const int count = job.count > 0 ? job.count : 5;
  const int moves = default_moves(job, w);
  std::vector<std::vector<int>> words;
  for (int q = 0; q < count; ++q) {
    words.push_back(random_word(w.datum, w.letters, moves, job.seed + q));
    validate_reduced_w0(w.datum, words.back());
  }
  if (job.format == "json") {
    json out = json::array();
    for (const auto& letters : words) out.push_back(letters);
    return out.dump(2) + "\n";
  }
  std::string out;
  for (const auto& letters : words) out += word_to_string(letters) + "\n";
  return out;
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult result;
  try {
    if (job.type.empty()) {
      throw Error(ErrorCode::BadJobSpec, "--type is required");
    }
    const RootDatum d = parse_datum(job.type);
    const ReducedWord w = resolve_word(job, d);
    if (job.command == "minor") {
      require_format(job, {"text", "json"});
      result.out = run_minor(job, w);
    } else if (job.command == "graph") {
      require_format(job, {"text", "json", "dot"});
      result.out = run_graph(job, w);
    } else if (job.command == "cone") {
      require_format(job, {"text", "json"});
      result.out = run_cone(job, w);
    } else if (job.command == "verify") {
      require_format(job, {"text", "json"});
      result.out = run_verify(job, w, &result.exit_code);
    } else if (job.command == "crystal-compare") {
      require_format(job, {"text", "json"});
      result.out = run_crystal_compare(job, w, &result.exit_code);
    } else if (job.command == "random-words") {
      require_format(job, {"text", "json"});
      result.out = run_random_words(job, w);
    } else {
      throw Error(ErrorCode::BadJobSpec, "unknown command \"" + job.command + "\"");
    }
  } catch (const Error& e) {
    result.exit_code = error_exit_class(e.code());
    result.err = nlohmann::json{
        {"error",
         {{"code", error_code_name(e.code())},
          {"message", e.message()},
          {"exit", result.exit_code}}}}
                     .dump() +
                 "\n";
  }
  return result;
}

}  // namespace decograph
