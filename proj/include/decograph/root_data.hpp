#pragma once

#include <string>
#include <vector>

#include "decograph/errors.hpp"

namespace decograph {

enum class LieType { A, B, C, D, E, F, G };

// Weight in fundamental-weight coordinates: coords[j-1] = <h_j, mu>.
struct Weight {
  std::vector<int> coords;

  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& o) const { return coords < o.coords; }
};

// Finite-type Cartan datum, Kac numbering. cartan[i][j] is a_{i+1,j+1}.
struct RootDatum {
  LieType lie_type;
  int rank;
  std::vector<std::vector<int>> cartan;

  int a(int i, int j) const { return cartan[i - 1][j - 1]; }  // 1-based
};

// Valid ranks: A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2.
// Throws InvalidRank otherwise.
RootDatum make_root_datum(LieType t, int rank);
std::vector<std::vector<int>> cartan_matrix(LieType t, int rank);

LieType parse_lie_type(char c);               // 'A'..'G', throws InvalidRank
RootDatum parse_datum(const std::string& s);  // "A3", "E6", ...
std::string datum_name(const RootDatum& d);

Weight fundamental_weight(const RootDatum& d, int i);  // e_i
Weight simple_root(const RootDatum& d, int i);         // i-th Cartan column
Weight rho(const RootDatum& d);                        // all-ones
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);

// s_i(mu) = mu - <h_i, mu> * alpha_i.
Weight reflect(const RootDatum& d, int i, const Weight& w);

// Applies the rightmost letter first: word (i_1,...,i_m) acts as s_{i_1}...s_{i_m}.
// Throws LetterOutOfRange.
Weight weyl_act(const RootDatum& d, const std::vector<int>& word, const Weight& w);

std::vector<int> minuscule_nodes(const RootDatum& d);
bool is_minuscule_node(const RootDatum& d, int i);
int positive_root_count(const RootDatum& d);

}  // namespace decograph
