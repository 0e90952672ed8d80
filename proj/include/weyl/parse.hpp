#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "weyl/free_poly.hpp"

namespace weyl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                           message),
        position(position) {}
  std::size_t position;
};

namespace detail {

// Recursive-descent parser for the expression grammar
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' ['-'] nat)?       (negative exponents: hbar only)
//   atom   := 'Q' ('_' nat)? | 'P' ('_' nat)? | 'hbar' | 'i'
//           | nat ('/' nat)? | '(' expr ')' | '[' expr ',' expr ']'
// Juxtaposition and '*' both mean the noncommutative product; '[a,b]'
// expands to ab - ba; unsubscripted Q/P mean index 1.
class ExprParser {
 public:
  ExprParser(std::string_view text, int dof) : text_(text), dof_(dof) {}

  FreePoly parse() {
    skip_space();
    FreePoly result = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return result;
  }

 private:
  struct Atom {
    FreePoly poly;
    bool is_hbar_symbol = false;
  };

  FreePoly expr() {
    bool negate = false;
    skip_space();
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    FreePoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_space();
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        FreePoly rhs = term();
        if (c == '+')
          acc += rhs;
        else
          acc -= rhs;
      } else {
        return acc;
      }
    }
  }

  FreePoly term() {
    FreePoly acc = factor();
    while (true) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  FreePoly factor() {
    Atom a = atom();
    skip_space();
    if (peek() != '^') return std::move(a.poly);
    ++pos_;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    }
    const std::size_t at = pos_;
    const long exponent = natural();
    if (negative) {
      if (!a.is_hbar_symbol)
        throw ParseError("negative exponents are only allowed on hbar", at);
      return FreePoly::constant(dof_, Coefficient::hbar(static_cast<int>(-exponent)));
    }
    if (a.is_hbar_symbol)
      return FreePoly::constant(dof_, Coefficient::hbar(static_cast<int>(exponent)));
    return pow(a.poly, static_cast<int>(exponent));
  }

  Atom atom() {
    skip_space();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == 'Q' || c == 'P') {
      ++pos_;
      int index = 1;
      skip_space();
      if (peek() == '_') {
        ++pos_;
        skip_space();
        index = static_cast<int>(natural());
      }
      const Generator g = c == 'Q' ? Q(index) : P(index);
      if (index < 1 || index > dof_)
        throw ParseError("generator index " + std::to_string(index) +
                             " out of range for dof " + std::to_string(dof_),
                         at);
      return {FreePoly::generator_poly(dof_, g)};
    }
    if (text_.substr(pos_, 4) == "hbar") {
      pos_ += 4;
      return {FreePoly::constant(dof_, Coefficient::hbar(1)), true};
    }
    if (c == 'i') {
      ++pos_;
      return {FreePoly::constant(dof_, Coefficient::i())};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = natural_digits();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t dat = pos_;
        const std::string den = natural_digits();
        // Base 10 always: the default base detection would read leading
        // zeros as octal.
        Rational r{mpz_class(num, 10), mpz_class(den, 10)};
        if (r.get_den() == 0) throw ParseError("zero denominator", dat);
        r.canonicalize();
        return {FreePoly::constant(dof_, Coefficient(std::move(r)))};
      }
      return {FreePoly::constant(dof_, Coefficient(Rational(mpz_class(num, 10))))};
    }
    if (c == '(') {
      ++pos_;
      FreePoly inner = expr();
      expect(')');
      return {std::move(inner)};
    }
    if (c == '[') {
      ++pos_;
      FreePoly a = expr();
      expect(',');
      FreePoly b = expr();
      expect(']');
      return {a * b - b * a};
    }
    throw ParseError(pos_ == text_.size() ? "unexpected end of input"
                                          : std::string("unexpected character '") + c + "'",
                     pos_);
  }

  static bool starts_factor(char c) {
    return c == 'Q' || c == 'P' || c == 'h' || c == 'i' || c == '(' || c == '[' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  std::string natural_digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  // Small naturals: generator indices and exponents.
  long natural() {
    const std::size_t at = pos_;
    const std::string digits = natural_digits();
    if (digits.size() > 6) throw ParseError("number too large here", at);
    return std::stol(digits);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  int dof_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses an expression into a free polynomial over the declared number of
// degrees of freedom. Commutator brackets are expanded, no commutation
// rule is applied.
inline FreePoly parse_expression(std::string_view text, int dof) {
  return detail::ExprParser(text, dof).parse();
}

}  // namespace weyl
