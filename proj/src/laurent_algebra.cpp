#include "decograph/laurent_algebra.hpp"

#include <algorithm>
#include <cctype>

namespace decograph {

bool ExpMonomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

ExpMonomial mono_combine(const ExpMonomial& m, const ExpMonomial& a, int sign) {
  if (m.slots() != a.slots()) {
    throw Error(ErrorCode::SlotMismatch,
                std::to_string(m.slots()) + " vs " + std::to_string(a.slots()));
  }
  ExpMonomial r = m;
  for (int p = 0; p < r.slots(); ++p) r.exps[p] += sign * a.exps[p];
  return r;
}

LaurentPoly poly_from_monomials(const std::vector<ExpMonomial>& monos) {
  LaurentPoly p;
  for (const auto& m : monos) {
    if (!monos.empty() && m.slots() != monos.front().slots()) {
      throw Error(ErrorCode::SlotMismatch, "inconsistent slot counts in monomial list");
    }
    p.terms[m] += 1;
  }
  return p;
}

std::string render(const ExpMonomial& m, const std::string& prefix) {
  std::string out;
  for (int p = 0; p < m.slots(); ++p) {
    if (m.exps[p] == 0) continue;
    if (!out.empty()) out += "*";
    out += prefix + std::to_string(p + 1);
    if (m.exps[p] != 1) out += "^" + std::to_string(m.exps[p]);
  }
  return out.empty() ? "1" : out;
}

std::string render(const LaurentPoly& p, const std::string& prefix) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : p.terms) {
    if (!out.empty()) out += " + ";
    if (coeff != 1) {
      out += std::to_string(coeff);
      if (!mono.is_one()) out += "*" + render(mono, prefix);
    } else {
      out += render(mono, prefix);
    }
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, const std::string& why) {
  throw Error(ErrorCode::ParseError, why + " in \"" + text + "\"");
}

// One factor "t5" or "t5^-1"; also accepts a bare integer as a coefficient.
struct Factor {
  bool is_coeff;
  long long coeff;
  int slot;
  int exp;
};

Factor parse_factor(const std::string& text, const std::string& piece,
                    const std::string& prefix, int slots) {
  if (!piece.empty() && std::isdigit(static_cast<unsigned char>(piece[0]))) {
    for (char c : piece) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        parse_fail(text, "bad coefficient \"" + piece + "\"");
      }
    }
    return Factor{true, std::stoll(piece), 0, 0};
  }
  if (piece.rfind(prefix, 0) != 0) {
    parse_fail(text, "expected \"" + prefix + "\" factor, got \"" + piece + "\"");
  }
  size_t pos = prefix.size();
  size_t caret = piece.find('^', pos);
  std::string slot_str = piece.substr(pos, caret == std::string::npos
                                               ? std::string::npos
                                               : caret - pos);
  if (slot_str.empty() ||
      !std::all_of(slot_str.begin(), slot_str.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    parse_fail(text, "bad slot \"" + piece + "\"");
  }
  int slot = std::stoi(slot_str);
  if (slot < 1 || slot > slots) {
    parse_fail(text, "slot " + std::to_string(slot) + " outside [1," +
                         std::to_string(slots) + "]");
  }
  int exp = 1;
  if (caret != std::string::npos) {
    std::string exp_str = piece.substr(caret + 1);
    size_t q = (!exp_str.empty() && (exp_str[0] == '-' || exp_str[0] == '+')) ? 1 : 0;
    if (exp_str.size() == q ||
        !std::all_of(exp_str.begin() + q, exp_str.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      parse_fail(text, "bad exponent \"" + piece + "\"");
    }
    exp = std::stoi(exp_str);
  }
  return Factor{false, 0, slot, exp};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos
                                                           : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// Returns (coefficient, monomial) for one "+"-separated term.
std::pair<long long, ExpMonomial> parse_term(const std::string& text,
                                             const std::string& term, int slots,
                                             const std::string& prefix) {
  ExpMonomial m{std::vector<int>(slots, 0)};
  long long coeff = 1;
  bool saw_coeff = false;
  auto factors = split(term, '*');
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    if (factors[fi].empty()) parse_fail(text, "empty factor");
    Factor f = parse_factor(text, factors[fi], prefix, slots);
    if (f.is_coeff) {
      if (saw_coeff || fi != 0) parse_fail(text, "misplaced coefficient");
      if (f.coeff == 1 && factors.size() == 1) {
        return {1, m};  // the constant monomial "1"
      }
      if (f.coeff < 1) parse_fail(text, "coefficients must be positive");
      coeff = f.coeff;
      saw_coeff = true;
    } else {
      m.exps[f.slot - 1] += f.exp;
    }
  }
  return {coeff, m};
}

}  // namespace

ExpMonomial parse_monomial(const std::string& text, int slots,
                           const std::string& prefix) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) parse_fail(text, "empty monomial");
  auto [coeff, m] = parse_term(text, compact, slots, prefix);
  if (coeff != 1) parse_fail(text, "monomial cannot carry a coefficient");
  return m;
}

LaurentPoly parse_poly(const std::string& text, int slots,
                       const std::string& prefix) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) parse_fail(text, "empty polynomial");
  LaurentPoly p;
  if (compact == "0") return p;
  for (const auto& term : split(compact, '+')) {
    if (term.empty()) parse_fail(text, "empty term");
    auto [coeff, m] = parse_term(text, term, slots, prefix);
    p.terms[m] += coeff;
  }
  return p;
}

}  // namespace decograph
