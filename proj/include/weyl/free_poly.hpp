#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weyl/coefficient.hpp"
#include "weyl/generator.hpp"

namespace weyl {

// A monomial of the free algebra: a finite sequence of generators. The
// empty word is the unit.
using Word = std::vector<Generator>;

// Graded lexicographic order: shorter words first, then letter-by-letter.
struct WordGradedLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Element of the free noncommutative algebra over 2f generators
// Q_1..Q_f, P_1..P_f with Coefficient scalars. Sparse canonical form:
// zero coefficients are never stored, words are kept in graded-lex order,
// and no commutation is ever applied. Immutable in spirit: every
// operation builds a fresh value.
class FreePoly {
 public:
  explicit FreePoly(int dof) : dof_(check_dof(dof)) {}

  static FreePoly constant(int dof, Coefficient c) {
    FreePoly out(dof);
    out.add_term(Word{}, std::move(c));
    return out;
  }

  static FreePoly monomial(int dof, Word w, Coefficient c = Coefficient(1)) {
    FreePoly out(dof);
    out.add_term(std::move(w), std::move(c));
    return out;
  }

  static FreePoly generator_poly(int dof, Generator g) {
    return monomial(dof, Word{g});
  }

  int dof() const { return dof_; }
  bool is_zero() const { return terms_.empty(); }

  // Maximal word length; -1 for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
  }

  const std::map<Word, Coefficient, WordGradedLess>& terms() const { return terms_; }

  void add_term(Word w, Coefficient c) {
    for (Generator g : w) check_index(g, dof_);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FreePoly& operator+=(const FreePoly& o) {
    check_same_dof(o);
    for (const auto& [w, c] : o.terms_) add_unchecked(w, c);
    return *this;
  }
  FreePoly& operator-=(const FreePoly& o) {
    check_same_dof(o);
    for (const auto& [w, c] : o.terms_) add_unchecked(w, -c);
    return *this;
  }

  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }

  // Word concatenation convolved with coefficient products.
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    a.check_same_dof(b);
    FreePoly out(a.dof_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_unchecked(std::move(w), ca * cb);
      }
    return out;
  }

  friend FreePoly operator*(const Coefficient& c, const FreePoly& p) {
    FreePoly out(p.dof_);
    for (const auto& [w, cw] : p.terms_) out.add_unchecked(w, c * cw);
    return out;
  }
  friend FreePoly operator*(const FreePoly& p, const Coefficient& c) { return c * p; }

  FreePoly operator-() const { return Coefficient(-1) * *this; }

  friend bool operator==(const FreePoly& a, const FreePoly& b) {
    return a.dof_ == b.dof_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FreePoly& a, const FreePoly& b) { return !(a == b); }

 private:
  static int check_dof(int dof) {
    if (dof < 0) throw std::invalid_argument("negative dof");
    return dof;
  }
  void check_same_dof(const FreePoly& o) const {
    if (dof_ != o.dof_)
      throw std::invalid_argument("dimension mismatch: dof " + std::to_string(dof_) +
                                  " vs " + std::to_string(o.dof_));
  }
  void add_unchecked(Word w, Coefficient c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int dof_;
  std::map<Word, Coefficient, WordGradedLess> terms_;
};

inline FreePoly pow(const FreePoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  FreePoly acc = FreePoly::constant(base.dof(), Coefficient(1));
  for (int k = 0; k < exponent; ++k) acc = acc * base;
  return acc;
}

namespace detail {

inline void check_directions(const FreePoly& p, std::span<const FreePoly> dirs) {
  if (static_cast<int>(dirs.size()) != 2 * p.dof())
    throw std::invalid_argument("direction vector arity " + std::to_string(dirs.size()) +
                                ", expected " + std::to_string(2 * p.dof()));
  for (const FreePoly& d : dirs)
    if (d.dof() != p.dof()) throw std::invalid_argument("dimension mismatch in direction");
}

// prefix ++ inserted ++ suffix, with the letter at `at` replaced.
inline Word splice(const Word& w, std::size_t at, const Word& inserted) {
  Word out;
  out.reserve(w.size() - 1 + inserted.size());
  out.insert(out.end(), w.begin(), w.begin() + at);
  out.insert(out.end(), inserted.begin(), inserted.end());
  out.insert(out.end(), w.begin() + at + 1, w.end());
  return out;
}

}  // namespace detail

// Occurrence-replacement partial derivative: every occurrence of `x` in a
// monomial is replaced, in turn, by the direction polynomial, and the
// results are summed. Linear in both the polynomial and the direction.
inline FreePoly partial(const FreePoly& p, Generator x, const FreePoly& direction) {
  check_index(x, p.dof());
  if (direction.dof() != p.dof())
    throw std::invalid_argument("dimension mismatch in partial direction");
  FreePoly out(p.dof());
  for (const auto& [w, c] : p.terms())
    for (std::size_t n = 0; n < w.size(); ++n) {
      if (w[n] != x) continue;
      for (const auto& [dw, dc] : direction.terms())
        out.add_term(detail::splice(w, n, dw), c * dc);
    }
  return out;
}

// Directional derivative p'[V]: the sum of all partials with the matching
// component of the 2f direction vector substituted.
inline FreePoly derivative(const FreePoly& p, std::span<const FreePoly> directions) {
  detail::check_directions(p, directions);
  FreePoly out(p.dof());
  for (const auto& [w, c] : p.terms())
    for (std::size_t n = 0; n < w.size(); ++n) {
      const FreePoly& d = directions[direction_slot(w[n], p.dof())];
      for (const auto& [dw, dc] : d.terms())
        out.add_term(detail::splice(w, n, dw), c * dc);
    }
  return out;
}

inline FreePoly derivative(const FreePoly& p, std::initializer_list<FreePoly> directions) {
  return derivative(p, std::span<const FreePoly>(directions.begin(), directions.size()));
}

// Second directional derivative p''[V, W]. The two insertions land on
// distinct letter positions, which keeps the inner directions constant
// during the outer pass; symmetry in (V, W) is structural.
inline FreePoly second_derivative(const FreePoly& p, std::span<const FreePoly> v,
                                  std::span<const FreePoly> w) {
  detail::check_directions(p, v);
  detail::check_directions(p, w);
  FreePoly out(p.dof());
  for (const auto& [word, c] : p.terms())
    for (std::size_t n = 0; n < word.size(); ++n)
      for (std::size_t m = 0; m < word.size(); ++m) {
        if (n == m) continue;
        const FreePoly& dv = v[direction_slot(word[n], p.dof())];
        const FreePoly& dw = w[direction_slot(word[m], p.dof())];
        for (const auto& [vw, vc] : dv.terms())
          for (const auto& [ww, wc] : dw.terms()) {
            Word res;
            res.reserve(word.size() - 2 + vw.size() + ww.size());
            const std::size_t first = std::min(n, m), second = std::max(n, m);
            const Word& at_first = n < m ? vw : ww;
            const Word& at_second = n < m ? ww : vw;
            res.insert(res.end(), word.begin(), word.begin() + first);
            res.insert(res.end(), at_first.begin(), at_first.end());
            res.insert(res.end(), word.begin() + first + 1, word.begin() + second);
            res.insert(res.end(), at_second.begin(), at_second.end());
            res.insert(res.end(), word.begin() + second + 1, word.end());
            out.add_term(std::move(res), c * vc * wc);
          }
      }
  return out;
}

// Evaluates p in any associative algebra A: generators are replaced by the
// 2f `point` values and scalars are embedded through `embed`. A needs
// operator+ and operator*.
template <class A, class Embed>
A evaluate(const FreePoly& p, std::span<const A> point, Embed&& embed) {
  if (static_cast<int>(point.size()) != 2 * p.dof())
    throw std::invalid_argument("evaluation point arity " + std::to_string(point.size()) +
                                ", expected " + std::to_string(2 * p.dof()));
  A acc = embed(Coefficient());
  for (const auto& [w, c] : p.terms()) {
    A term = embed(c);
    for (Generator g : w) term = term * point[direction_slot(g, p.dof())];
    acc = acc + term;
  }
  return acc;
}

// The derivative of the evaluation map at `point` in direction `dirs`:
// one letter at a time is replaced by its direction value.
template <class A, class Embed>
A evaluate_derivative(const FreePoly& p, std::span<const A> point, std::span<const A> dirs,
                      Embed&& embed) {
  if (point.size() != dirs.size() || static_cast<int>(point.size()) != 2 * p.dof())
    throw std::invalid_argument("evaluation point/direction arity mismatch");
  A acc = embed(Coefficient());
  for (const auto& [w, c] : p.terms())
    for (std::size_t n = 0; n < w.size(); ++n) {
      A term = embed(c);
      for (std::size_t s = 0; s < w.size(); ++s) {
        const A& factor = s == n ? dirs[direction_slot(w[s], p.dof())]
                                 : point[direction_slot(w[s], p.dof())];
        term = term * factor;
      }
      acc = acc + term;
    }
  return acc;
}

// Homomorphic substitution of the 2f generators by the given values (all
// sharing one target dof).
inline FreePoly compose(const FreePoly& p, std::span<const FreePoly> values) {
  if (static_cast<int>(values.size()) != 2 * p.dof())
    throw std::invalid_argument("substitution arity " + std::to_string(values.size()) +
                                ", expected " + std::to_string(2 * p.dof()));
  int target = values.empty() ? 0 : values.front().dof();
  for (const FreePoly& v : values)
    if (v.dof() != target) throw std::invalid_argument("dimension mismatch in substitution");
  return evaluate<FreePoly>(p, values,
                            [target](const Coefficient& c) { return FreePoly::constant(target, c); });
}

// p'(point)[dirs] with both the base point and the directions substituted;
// used to state the chain rule concretely.
inline FreePoly derivative_at(const FreePoly& p, std::span<const FreePoly> point,
                              std::span<const FreePoly> dirs) {
  int target = point.empty() ? 0 : point.front().dof();
  return evaluate_derivative<FreePoly>(
      p, point, dirs, [target](const Coefficient& c) { return FreePoly::constant(target, c); });
}

}  // namespace weyl
