#include "decograph/word_engine.hpp"

#include <algorithm>
#include <random>

namespace decograph {

ReducedWord validate_reduced_w0(const RootDatum& d, const std::vector<int>& letters) {
  const int expected = positive_root_count(d);
  if (static_cast<int>(letters.size()) != expected) {
    throw Error(ErrorCode::WrongLength,
                "expected " + std::to_string(expected) + " letters, got " +
                    std::to_string(letters.size()));
  }
  if (weyl_act(d, letters, rho(d)) != weight_neg(rho(d))) {
    throw Error(ErrorCode::NotLongestElement,
                "word does not send rho to -rho: " + word_to_string(letters));
  }
  return ReducedWord{d, letters};
}

int source_index_k(const ReducedWord& w, int i) {
  const Weight target = simple_root(w.datum, i);
  std::vector<int> suffix;  // (i_N, ..., i_{k+1}); rightmost acts first
  int found = 0;
  for (int k = w.N(); k >= 1; --k) {
    if (weyl_act(w.datum, suffix, simple_root(w.datum, w.letter(k))) == target) {
      if (found != 0) {
        throw Error(ErrorCode::InternalInconsistency,
                    "source index for i=" + std::to_string(i) + " not unique");
      }
      found = k;
    }
    suffix.push_back(w.letter(k));
  }
  if (found == 0) {
    throw Error(ErrorCode::NotFound,
                "no source index for i=" + std::to_string(i));
  }
  return found;
}

int last_occurrence_J(const ReducedWord& w, int i) {
  for (int k = w.N(); k >= 1; --k) {
    if (w.letter(k) == i) return k;
  }
  throw Error(ErrorCode::InternalInconsistency,
              "letter " + std::to_string(i) + " absent from word");
}

int jplus(const ReducedWord& w, int j) {
  for (int l = j + 1; l <= w.N(); ++l) {
    if (w.letter(l) == w.letter(j)) return l;
  }
  return w.N() + 1;
}

int jminus(const ReducedWord& w, int j) {
  for (int l = j - 1; l >= 1; --l) {
    if (w.letter(l) == w.letter(j)) return l;
  }
  return 0;
}

ExpMonomial a_monomial(const ReducedWord& w, int j) {
  const int jp = jplus(w, j);
  if (jp == w.N() + 1) {
    throw Error(ErrorCode::NoNextOccurrence,
                "position " + std::to_string(j) + " has no next occurrence");
  }
  ExpMonomial m{std::vector<int>(w.N(), 0)};
  m.exps[j - 1] = 1;
  m.exps[jp - 1] = 1;
  for (int l = j + 1; l < jp; ++l) {
    m.exps[l - 1] = w.datum.a(w.letter(l), w.letter(j));
  }
  return m;
}

ExpMonomial lowest_term(const ReducedWord& w, int i) {
  const int J = last_occurrence_J(w, i);
  ExpMonomial m{std::vector<int>(w.N(), 0)};
  m.exps[J - 1] = 1;
  for (int l = J + 1; l <= w.N(); ++l) {
    m.exps[l - 1] = w.datum.a(w.letter(l), i);
  }
  return m;
}

ExpMonomial highest_term(const ReducedWord& w, int i) {
  ExpMonomial m{std::vector<int>(w.N(), 0)};
  m.exps[source_index_k(w, i) - 1] = 1;
  return m;
}

AdaptedReport is_adapted(const ReducedWord& w) {
  AdaptedReport report{true, {}};
  for (int j = 1; j <= w.datum.rank; ++j) {
    for (int l = j + 1; l <= w.datum.rank; ++l) {
      if (w.datum.a(j, l) == 0) continue;
      AdaptedPair pair{j, l, {}, true};
      for (int pos = 1; pos <= w.N(); ++pos) {
        const int x = w.letter(pos);
        if (x == j || x == l) pair.subword.push_back(x);
      }
      for (size_t q = 1; q < pair.subword.size(); ++q) {
        if (pair.subword[q] == pair.subword[q - 1]) {
          pair.alternates = false;
          break;
        }
      }
      report.adapted = report.adapted && pair.alternates;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

std::vector<int> canonical_word(const RootDatum& d) {
  std::vector<int> letters;
  switch (d.lie_type) {
    case LieType::A:
      for (int b = 1; b <= d.rank; ++b) {
        for (int i = b; i >= 1; --i) letters.push_back(i);
      }
      break;
    case LieType::B:
    case LieType::C:
      for (int rep = 0; rep < d.rank; ++rep) {
        for (int i = 1; i <= d.rank; ++i) letters.push_back(i);
      }
      break;
    case LieType::G:
      letters = {1, 2, 1, 2, 1, 2};
      break;
    case LieType::D:
    case LieType::E:
    case LieType::F: {
      // Greedy descent rho -> -rho; each reflection at a strictly positive
      // pairing adds one letter of a reduced expression.
      Weight mu = rho(d);
      std::vector<int> picks;
      const Weight stop = weight_neg(rho(d));
      while (!(mu == stop)) {
        int pick = 0;
        for (int i = 1; i <= d.rank; ++i) {
          if (mu.coords[i - 1] > 0) {
            pick = i;
            break;
          }
        }
        if (pick == 0) {
          throw Error(ErrorCode::InternalInconsistency,
                      "greedy descent stalled before -rho");
        }
        mu = reflect(d, pick, mu);
        picks.push_back(pick);
      }
      letters.assign(picks.rbegin(), picks.rend());
      break;
    }
  }
  validate_reduced_w0(d, letters);
  return letters;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> letters;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) {
      throw Error(ErrorCode::ParseError, "empty letter in word \"" + text + "\"");
    }
    for (char c : cur) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::ParseError,
                    "bad letter \"" + cur + "\" in word \"" + text + "\"");
      }
    }
    letters.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return letters;
}

std::string word_to_string(const std::vector<int>& letters) {
  std::string out;
  for (size_t q = 0; q < letters.size(); ++q) {
    if (q) out += ",";
    out += std::to_string(letters[q]);
  }
  return out;
}

namespace {

int bond_block_len(const RootDatum& d, int x, int y) {
  if (x == y) return 0;
  const int prod = d.a(x, y) * d.a(y, x);
  switch (prod) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

}  // namespace

std::vector<BraidMove> legal_moves(const RootDatum& d, const std::vector<int>& letters) {
  std::vector<BraidMove> moves;
  const int n = static_cast<int>(letters.size());
  for (int pos = 1; pos <= n - 1; ++pos) {
    const int x = letters[pos - 1];
    const int y = letters[pos];
    const int len = bond_block_len(d, x, y);
    if (len == 0 || pos + len - 1 > n) continue;
    bool alternating = true;
    for (int q = 2; q < len; ++q) {
      if (letters[pos + q - 1] != (q % 2 == 0 ? x : y)) {
        alternating = false;
        break;
      }
    }
    if (alternating) moves.push_back(BraidMove{pos, len});
  }
  return moves;
}

std::vector<int> apply_move(const std::vector<int>& letters, const BraidMove& m) {
  std::vector<int> out = letters;
  const int x = letters[m.pos - 1];
  const int y = letters[m.pos];
  for (int q = 0; q < m.len; ++q) {
    out[m.pos - 1 + q] = (q % 2 == 0) ? y : x;
  }
  return out;
}

std::vector<int> random_word(const RootDatum& d, const std::vector<int>& start,
                             int moves, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> letters = start;
  for (int step = 0; step < moves; ++step) {
    auto legal = legal_moves(d, letters);
    if (legal.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, legal.size() - 1);
    letters = apply_move(letters, legal[pick(rng)]);
  }
  return letters;
}

}  // namespace decograph
