#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "decograph/cli.hpp"

namespace {

void add_common(CLI::App* cmd, decograph::JobSpec& job, bool with_i) {
  cmd->add_option("--type", job.type, "Lie type and rank, e.g. A3, D4, E6")
      ->required();
  cmd->add_option("--word", job.word,
                  "comma-separated reduced word of w0; default: canonical word");
  if (with_i) cmd->add_option("--i", job.i, "node index (1-based)");
  cmd->add_option("--format", job.format, "text, json, or dot");
  cmd->add_option("--output", job.output, "write to file instead of stdout");
  cmd->add_flag("--force", job.force, "run past the proven minuscule/adapted scope");
  cmd->add_option("--max-rounds", job.max_rounds,
                  "round cap for the graph growth (default: automatic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decoration-graph minors, trail verification, and B(infinity) cones"};
  app.require_subcommand(1);
  decograph::JobSpec job;

  CLI::App* minor = app.add_subcommand("minor", "half-decoration minor for one node");
  add_common(minor, job, true);

  CLI::App* graph = app.add_subcommand("graph", "decoration graph for one node");
  add_common(graph, job, true);

  CLI::App* cone = app.add_subcommand("cone", "tropical inequality system over all nodes");
  add_common(cone, job, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "check the graph against the trail oracle (add --count for random words)");
  add_common(verify, job, true);
  verify->add_option("--count", job.count, "number of random words to verify");
  verify->add_option("--seed", job.seed, "random word seed");
  verify->add_option("--moves", job.moves, "braid moves per random word (default 3N)");

  CLI::App* crystal = app.add_subcommand(
      "crystal-compare", "compare graph monomials with a crystal realization");
  add_common(crystal, job, true);

  CLI::App* words = app.add_subcommand("random-words", "emit random reduced words of w0");
  add_common(words, job, false);
  words->add_option("--count", job.count, "number of words (default 5)");
  words->add_option("--seed", job.seed, "random word seed");
  words->add_option("--moves", job.moves, "braid moves per word (default 3N)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int parse_exit = app.exit(e);
    return parse_exit == 0 ? 0 : 2;
  }
  job.command = app.get_subcommands().front()->get_name();

  const decograph::RunResult result = decograph::run(job);
  if (!result.err.empty()) std::cerr << result.err;
  if (!result.out.empty()) {
    if (job.output.empty()) {
      std::cout << result.out;
    } else {
      std::ofstream file(job.output);
      if (!file) {
        std::cerr << "cannot open output file " << job.output << "\n";
        return 2;
      }
      file << result.out;
    }
  }
  return result.exit_code;
}
