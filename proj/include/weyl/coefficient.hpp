#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "weyl/rational.hpp"

namespace weyl {

// Laurent polynomial in the central symbol hbar with Gaussian-rational
// coefficients. This is the scalar ring of the whole library; allowing
// negative hbar powers keeps the i/hbar prefactor of the Heisenberg
// generator a total operation. Zero entries are never stored, so equality
// of the term maps is equality of scalars.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) { add(0, GaussianRational(value)); }
  Coefficient(Rational value) { add(0, GaussianRational(std::move(value))); }
  Coefficient(GaussianRational value) { add(0, std::move(value)); }
  Coefficient(GaussianRational value, int hbar_power) { add(hbar_power, std::move(value)); }

  static Coefficient i() { return Coefficient(GaussianRational::i()); }
  static Coefficient hbar(int power = 1) { return Coefficient(GaussianRational(1), power); }

  // (i*hbar)^power, exact: i^power cycles through {1, i, -1, -i}.
  static Coefficient i_hbar(int power) {
    static const int re[4] = {1, 0, -1, 0};
    static const int im[4] = {0, 1, 0, -1};
    int k = ((power % 4) + 4) % 4;
    return Coefficient(GaussianRational(Rational(re[k]), Rational(im[k])), power);
  }

  bool is_zero() const { return terms_.empty(); }

  // Lowest hbar exponent present; nullopt for the zero scalar.
  std::optional<int> min_hbar_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  const std::map<int, GaussianRational>& terms() const { return terms_; }

  Coefficient& operator+=(const Coefficient& o) {
    for (const auto& [h, g] : o.terms_) add(h, g);
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    for (const auto& [h, g] : o.terms_) add(h, -g);
    return *this;
  }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }

  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient out;
    for (const auto& [ha, ga] : a.terms_)
      for (const auto& [hb, gb] : b.terms_) out.add(ha + hb, ga * gb);
    return out;
  }

  Coefficient operator-() const {
    Coefficient out;
    for (const auto& [h, g] : terms_) out.terms_.emplace(h, -g);
    return out;
  }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  // Substitutes a concrete value for hbar. Negative powers require a
  // nonzero value.
  GaussianRational eval_hbar(const GaussianRational& value) const {
    GaussianRational out;
    for (const auto& [h, g] : terms_) {
      if (h < 0 && value.is_zero())
        throw std::domain_error("hbar substitution: negative power at hbar = 0");
      out += g * pow(value, h);
    }
    return out;
  }

  void add(int hbar_power, const GaussianRational& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(hbar_power, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  std::map<int, GaussianRational> terms_;
};

}  // namespace weyl
