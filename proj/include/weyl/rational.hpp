#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace weyl {

// Exact rational scalar. GMP keeps values canonical: gcd-reduced with a
// positive denominator, which the printers rely on.
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "a" or "a/b" in base 10. Strict: no whitespace, no empty parts.
inline Rational rational_from_string(const std::string& text) {
  const auto fail = [&] {
    throw std::invalid_argument("invalid rational: '" + text + "'");
  };
  std::size_t pos = 0;
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail();
  };
  if (pos < text.size() && text[pos] == '-') ++pos;
  digits();
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    ++pos;
    digits();
  }
  if (pos != text.size()) fail();

  mpq_class r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) fail();
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long value) : re(value), im(0) {}
  GaussianRational(Rational real) : re(std::move(real)), im(0) {}
  GaussianRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero GaussianRational");
    Rational n = re * re + im * im;
    return {re / n, -im / n};
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational nre = re * o.re - im * o.im;
    Rational nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    return a *= b;
  }
  GaussianRational operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

// a^n for integer n (n < 0 uses the exact complex inverse).
inline GaussianRational pow(const GaussianRational& base, int n) {
  GaussianRational b = n < 0 ? base.inverse() : base;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(long)n) : static_cast<unsigned long>(n);
  GaussianRational acc(1);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace weyl
