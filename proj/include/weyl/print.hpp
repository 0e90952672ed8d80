#pragma once

#include <span>
#include <string>
#include <vector>

#include "weyl/weyl_element.hpp"

namespace weyl {

namespace detail {

inline std::string abs_string(const Rational& r) {
  return r < 0 ? Rational(-r).get_str() : r.get_str();
}

// "a+b*i" with canonical signs and unit elision, for parenthesized mixed
// coefficients.
inline std::string gaussian_inner(const GaussianRational& g) {
  std::string s = g.re.get_str();
  s += g.im < 0 ? '-' : '+';
  const Rational mag = g.im < 0 ? Rational(-g.im) : g.im;
  if (mag != 1) s += mag.get_str() + "*";
  s += 'i';
  return s;
}

struct TermText {
  bool negative = false;
  std::string body;
};

inline TermText format_term(const GaussianRational& g, int hpow, const Word& word, int dof) {
  TermText out;
  std::vector<std::string> factors;
  bool magnitude_one = false;
  if (g.im == 0) {
    out.negative = g.re < 0;
    if (abs_string(g.re) == "1")
      magnitude_one = true;
    else
      factors.push_back(abs_string(g.re));
  } else if (g.re == 0) {
    out.negative = g.im < 0;
    if (abs_string(g.im) != "1") factors.push_back(abs_string(g.im));
    factors.push_back("i");
  } else {
    factors.push_back("(" + gaussian_inner(g) + ")");
  }
  if (hpow != 0) {
    std::string h = "hbar";
    if (hpow != 1) h += "^" + std::to_string(hpow);
    factors.push_back(std::move(h));
  }
  for (std::size_t n = 0; n < word.size();) {
    std::size_t run = 1;
    while (n + run < word.size() && word[n + run] == word[n]) ++run;
    std::string letter(1, word[n].kind == GenKind::position ? 'Q' : 'P');
    if (dof > 1) letter += "_" + std::to_string(word[n].index);
    if (run > 1) letter += "^" + std::to_string(run);
    factors.push_back(std::move(letter));
    n += run;
  }
  if (factors.empty()) factors.push_back(magnitude_one ? "1" : abs_string(g.re));
  for (std::size_t n = 0; n < factors.size(); ++n) {
    if (n) out.body += '*';
    out.body += factors[n];
  }
  return out;
}

}  // namespace detail

// Deterministic canonical text form: terms in descending graded-lex word
// order, hbar powers ascending within a word, one printed term per
// (word, hbar power). parse_expression inverts it exactly.
inline std::string print_canonical(const FreePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [word, coeff] = *it;
    for (const auto& [hpow, g] : coeff.terms()) {
      const detail::TermText t = detail::format_term(g, hpow, word, p.dof());
      if (first) {
        if (t.negative) out += '-';
        first = false;
      } else {
        out += t.negative ? " - " : " + ";
      }
      out += t.body;
    }
  }
  return out;
}

inline std::string print_canonical(const WeylElement& x) { return print_canonical(lift(x)); }

inline std::string print_components(std::span<const WeylElement> comps) {
  std::string out = "(";
  for (std::size_t n = 0; n < comps.size(); ++n) {
    if (n) out += ", ";
    out += print_canonical(comps[n]);
  }
  out += ")";
  return out;
}

}  // namespace weyl
