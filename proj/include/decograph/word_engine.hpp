#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "decograph/laurent_algebra.hpp"
#include "decograph/root_data.hpp"

namespace decograph {

// A certified reduced word of the longest Weyl group element.
// Certificate: length == positive_root_count and rho |-> -rho.
struct ReducedWord {
  RootDatum datum;
  std::vector<int> letters;  // 1-based node indices

  int N() const { return static_cast<int>(letters.size()); }
  int letter(int pos) const { return letters[pos - 1]; }  // 1-based position
};

// Throws WrongLength or NotLongestElement (LetterOutOfRange for bad letters).
ReducedWord validate_reduced_w0(const RootDatum& d, const std::vector<int>& letters);

// The unique k with s_{i_N}...s_{i_{k+1}} alpha_{i_k} = alpha_i. The scan covers
// all k and asserts uniqueness; NotFound / InternalInconsistency are bug signals.
int source_index_k(const ReducedWord& w, int i);

// Largest position J with i_J = i.
int last_occurrence_J(const ReducedWord& w, int i);

// Next/previous position carrying the same letter; sentinels N+1 and 0.
int jplus(const ReducedWord& w, int j);
int jminus(const ReducedWord& w, int j);

// Exchange monomial at position j: exps[j]=+1, exps[j+]=+1, and
// exps[l]=a_{i_l,i_j} for j<l<j+. Throws NoNextOccurrence when j+ = N+1.
ExpMonomial a_monomial(const ReducedWord& w, int j);

// exps[J]=1 and exps[m]=a_{i_m,i} for m>J.
ExpMonomial lowest_term(const ReducedWord& w, int i);

// The single variable t_k at k = source_index_k(w, i).
ExpMonomial highest_term(const ReducedWord& w, int i);

struct AdaptedPair {
  int j, l;                  // connected pair j < l
  std::vector<int> subword;  // letters of w restricted to {j, l}
  bool alternates;
};
struct AdaptedReport {
  bool adapted;  // every connected pair's subword strictly alternates
  std::vector<AdaptedPair> pairs;
};
AdaptedReport is_adapted(const ReducedWord& w);

// Fixed per-type seed word, self-validated. A: (1,2,1,3,2,1,...);
// B/C: (1..n) repeated n times; G2: (1,2,1,2,1,2); D/E/F: greedy descent
// from rho, reversed into this library's rightmost-first convention.
std::vector<int> canonical_word(const RootDatum& d);

// Text form "1,2,3,2,1,2". parse_word throws ParseError.
std::vector<int> parse_word(const std::string& text);
std::string word_to_string(const std::vector<int>& letters);

// One legal rewrite: replace the alternating block at pos (1-based) of length
// len by the block starting with the other letter. len 2 is a commutation;
// len 3/4/6 are braid moves for bond orders 3/4/6.
struct BraidMove {
  int pos;
  int len;
};
std::vector<BraidMove> legal_moves(const RootDatum& d, const std::vector<int>& letters);
std::vector<int> apply_move(const std::vector<int>& letters, const BraidMove& m);

// Applies `moves` uniformly random legal moves starting from `start`.
// Deterministic for a fixed seed.
std::vector<int> random_word(const RootDatum& d, const std::vector<int>& start,
                             int moves, uint64_t seed);

}  // namespace decograph
