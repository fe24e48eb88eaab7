#pragma once

#include <cstdint>
#include <string>

namespace decograph {

// One CLI invocation. Empty/zero fields are unset; run() validates what the
// chosen command needs. The word must parse and validate before any
// computation runs.
struct JobSpec {
  std::string command;  // minor | graph | cone | verify | crystal-compare | random-words
  std::string type;     // "A3", "D4", ...
  std::string word;     // comma-separated letters; empty = per-type canonical word
  int i = 0;            // node index, 0 = unset
  std::string format = "text";  // text | json | dot
  std::string output;           // file path; empty = stdout
  uint64_t seed = 1;
  int count = 0;       // verify: random words to check; random-words: words to emit
  bool force = false;
  int max_rounds = 0;  // 0 = automatic (DECOGRAPH_MAX_ROUNDS overrides)
  int moves = 0;       // braid moves per random word; 0 = 3N
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 validation, 3 algorithm/internal, 4 mismatch
  std::string out;
  std::string err;  // error JSON on failure
};

// Deterministic for a fixed JobSpec (including seed).
RunResult run(const JobSpec& job);

}  // namespace decograph
