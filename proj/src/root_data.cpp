#include "decograph/root_data.hpp"

#include <algorithm>
#include <cstdlib>

namespace decograph {

namespace {

const char* type_letter(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E: return "E";
    case LieType::F: return "F";
    case LieType::G: return "G";
  }
  return "?";
}

bool rank_ok(LieType t, int n) {
  switch (t) {
    case LieType::A: return n >= 1;
    case LieType::B: return n >= 2;
    case LieType::C: return n >= 2;
    case LieType::D: return n >= 3;
    case LieType::E: return n >= 6 && n <= 8;
    case LieType::F: return n == 4;
    case LieType::G: return n == 2;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(LieType t, int rank) {
  if (!rank_ok(t, rank)) {
    throw Error(ErrorCode::InvalidRank,
                std::string(type_letter(t)) + std::to_string(rank) +
                    " is not a finite type");
  }
  const int n = rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based simple edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  // Chain length per type; branch/multiple bonds adjusted after.
  int chain = n;
  if (t == LieType::D || t == LieType::E) chain = n - 1;
  for (int i = 1; i < chain; ++i) bond(i, i + 1);
  switch (t) {
    case LieType::A:
      break;
    case LieType::B:  // node n short
      a[n - 1][n - 2] = -2;
      break;
    case LieType::C:  // node n long
      a[n - 2][n - 1] = -2;
      break;
    case LieType::D:  // fork: node n attached to node n-2
      bond(n, n - 2);
      break;
    case LieType::E:  // chain 1..n-1, node n attached to node 3
      bond(n, 3);
      break;
    case LieType::F:  // nodes 1,2 long; 3,4 short
      a[2][1] = -2;
      break;
    case LieType::G:  // node 1 long, node 2 short
      a[1][0] = -3;
      break;
  }
  return a;
}

RootDatum make_root_datum(LieType t, int rank) {
  return RootDatum{t, rank, cartan_matrix(t, rank)};
}

LieType parse_lie_type(char c) {
  switch (c) {
    case 'A': return LieType::A;
    case 'B': return LieType::B;
    case 'C': return LieType::C;
    case 'D': return LieType::D;
    case 'E': return LieType::E;
    case 'F': return LieType::F;
    case 'G': return LieType::G;
  }
  throw Error(ErrorCode::InvalidRank,
              std::string("unknown type letter '") + c + "'");
}

RootDatum parse_datum(const std::string& s) {
  if (s.size() < 2) {
    throw Error(ErrorCode::InvalidRank, "expected <letter><rank>, got \"" + s + "\"");
  }
  LieType t = parse_lie_type(s[0]);
  for (size_t p = 1; p < s.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(s[p]))) {
      throw Error(ErrorCode::InvalidRank, "bad rank in \"" + s + "\"");
    }
  }
  return make_root_datum(t, std::atoi(s.c_str() + 1));
}

std::string datum_name(const RootDatum& d) {
  return std::string(type_letter(d.lie_type)) + std::to_string(d.rank);
}

Weight fundamental_weight(const RootDatum& d, int i) {
  Weight w{std::vector<int>(d.rank, 0)};
  w.coords[i - 1] = 1;
  return w;
}

Weight simple_root(const RootDatum& d, int i) {
  Weight w{std::vector<int>(d.rank, 0)};
  for (int j = 0; j < d.rank; ++j) w.coords[j] = d.cartan[j][i - 1];
  return w;
}

Weight rho(const RootDatum& d) { return Weight{std::vector<int>(d.rank, 1)}; }

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t j = 0; j < r.coords.size(); ++j) r.coords[j] += b.coords[j];
  return r;
}

Weight weight_neg(const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight reflect(const RootDatum& d, int i, const Weight& w) {
  Weight r = w;
  const int pairing = w.coords[i - 1];
  for (int j = 0; j < d.rank; ++j) r.coords[j] -= pairing * d.cartan[j][i - 1];
  return r;
}

Weight weyl_act(const RootDatum& d, const std::vector<int>& word, const Weight& w) {
  Weight r = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > d.rank) {
      throw Error(ErrorCode::LetterOutOfRange,
                  "letter " + std::to_string(*it) + " outside [1," +
                      std::to_string(d.rank) + "]");
    }
    r = reflect(d, *it, r);
  }
  return r;
}

std::vector<int> minuscule_nodes(const RootDatum& d) {
  const int n = d.rank;
  switch (d.lie_type) {
    case LieType::A: {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i + 1;
      return all;
    }
    case LieType::B: return {n};
    case LieType::C: return {1};
    case LieType::D: return {1, n - 1, n};
    case LieType::E:
      if (n == 6) return {1, 5};
      if (n == 7) return {6};
      return {};
    case LieType::F:
    case LieType::G:
      return {};
  }
  return {};
}

bool is_minuscule_node(const RootDatum& d, int i) {
  auto nodes = minuscule_nodes(d);
  return std::find(nodes.begin(), nodes.end(), i) != nodes.end();
}

int positive_root_count(const RootDatum& d) {
  const int n = d.rank;
  switch (d.lie_type) {
    case LieType::A: return n * (n + 1) / 2;
    case LieType::B:
    case LieType::C: return n * n;
    case LieType::D: return n * (n - 1);
    case LieType::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case LieType::F: return 24;
    case LieType::G: return 6;
  }
  return 0;
}

}  // namespace decograph
