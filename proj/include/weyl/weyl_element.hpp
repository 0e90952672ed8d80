#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weyl/free_poly.hpp"

namespace weyl {

// Canonical basis monomial of the quotient algebra: the product
// P_1^{p_1} Q_1^{q_1} ... P_f^{p_f} Q_f^{q_f}, with all momenta left of
// positions within each degree of freedom.
struct NormalMonomial {
  std::vector<int> p_exp;
  std::vector<int> q_exp;

  static NormalMonomial unit(int dof) {
    return {std::vector<int>(dof, 0), std::vector<int>(dof, 0)};
  }

  int degree() const {
    int d = 0;
    for (int e : p_exp) d += e;
    for (int e : q_exp) d += e;
    return d;
  }

  Word to_word() const {
    Word w;
    w.reserve(degree());
    for (std::size_t k = 0; k < p_exp.size(); ++k) {
      w.insert(w.end(), p_exp[k], P(static_cast<int>(k) + 1));
      w.insert(w.end(), q_exp[k], Q(static_cast<int>(k) + 1));
    }
    return w;
  }

  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
};

// Graded lexicographic order on the canonical words, evaluated on the
// run-length form without materializing letters.
struct NormalMonomialLess {
  bool operator()(const NormalMonomial& a, const NormalMonomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const std::size_t f = std::max(a.p_exp.size(), b.p_exp.size());
    // Walk the block sequence (P_1, Q_1, P_2, Q_2, ...) of both words.
    std::size_t ka = 0, kb = 0;  // block index: 2k = P_{k+1}, 2k+1 = Q_{k+1}
    int ra = 0, rb = 0;          // letters left in the current block
    auto advance = [&](const NormalMonomial& m, std::size_t& blk, int& rem) {
      while (rem == 0 && blk < 2 * f) {
        const std::size_t k = blk / 2;
        if (k < m.p_exp.size()) rem = (blk % 2 == 0) ? m.p_exp[k] : m.q_exp[k];
        if (rem == 0) ++blk;
      }
    };
    while (true) {
      advance(a, ka, ra);
      advance(b, kb, rb);
      if (ra == 0 && rb == 0) return false;  // equal words
      if (ra == 0) return true;
      if (rb == 0) return false;
      if (ka != kb) {
        const Generator ga = ka % 2 == 0 ? P(static_cast<int>(ka / 2) + 1)
                                         : Q(static_cast<int>(ka / 2) + 1);
        const Generator gb = kb % 2 == 0 ? P(static_cast<int>(kb / 2) + 1)
                                         : Q(static_cast<int>(kb / 2) + 1);
        return ga < gb;
      }
      const int step = std::min(ra, rb);
      ra -= step;
      rb -= step;
      if (ra == 0) ++ka;
      if (rb == 0) ++kb;
    }
  }
};

// Element of the quotient of the free algebra by the canonical commutation
// ideal, stored in its unique normal form. Two elements are equal exactly
// when their term maps are identical.
class WeylElement {
 public:
  explicit WeylElement(int dof) : dof_(dof) {
    if (dof < 0) throw std::invalid_argument("negative dof");
  }

  static WeylElement constant(int dof, Coefficient c) {
    WeylElement out(dof);
    out.add_term(NormalMonomial::unit(dof), std::move(c));
    return out;
  }

  static WeylElement monomial(int dof, NormalMonomial m, Coefficient c = Coefficient(1)) {
    WeylElement out(dof);
    out.add_term(std::move(m), std::move(c));
    return out;
  }

  int dof() const { return dof_; }
  bool is_zero() const { return terms_.empty(); }

  // Total degree of the normal form; -1 for zero.
  int degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
  }

  const std::map<NormalMonomial, Coefficient, NormalMonomialLess>& terms() const {
    return terms_;
  }

  void add_term(NormalMonomial m, Coefficient c) {
    if (static_cast<int>(m.p_exp.size()) != dof_ ||
        static_cast<int>(m.q_exp.size()) != dof_)
      throw std::invalid_argument("monomial arity does not match dof");
    for (int e : m.p_exp)
      if (e < 0) throw std::invalid_argument("negative exponent");
    for (int e : m.q_exp)
      if (e < 0) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WeylElement& operator+=(const WeylElement& o) {
    check_same_dof(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  WeylElement& operator-=(const WeylElement& o) {
    check_same_dof(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }

  friend WeylElement operator*(const Coefficient& c, const WeylElement& x) {
    WeylElement out(x.dof_);
    for (const auto& [m, cm] : x.terms_) out.add_term(m, c * cm);
    return out;
  }
  friend WeylElement operator*(const WeylElement& x, const Coefficient& c) { return c * x; }

  WeylElement operator-() const { return Coefficient(-1) * *this; }

  // Defined below: lift, multiply in the free algebra, renormalize.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.dof_ == b.dof_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

 private:
  void check_same_dof(const WeylElement& o) const {
    if (dof_ != o.dof_)
      throw std::invalid_argument("dimension mismatch: dof " + std::to_string(dof_) +
                                  " vs " + std::to_string(o.dof_));
  }

  int dof_;
  std::map<NormalMonomial, Coefficient, NormalMonomialLess> terms_;
};

namespace detail {

// Run-length form of a single-dof word, e.g. P^2 Q^3 P.
using Runs = std::vector<std::pair<GenKind, int>>;

inline void merge_runs(Runs& rs) {
  Runs out;
  for (const auto& r : rs) {
    if (r.second == 0) continue;
    if (!out.empty() && out.back().first == r.first)
      out.back().second += r.second;
    else
      out.push_back(r);
  }
  rs = std::move(out);
}

// The r-th term factor of the reordering identity
//   Q^n P^m = sum_{r=0}^{min(n,m)} C(n,r) C(m,r) r! (i hbar)^r P^{m-r} Q^{n-r}.
inline Coefficient reorder_term_factor(int n, int m, int r) {
  mpz_class bn, bm, fr;
  mpz_bin_uiui(bn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  mpz_bin_uiui(bm.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  mpz_fac_ui(fr.get_mpz_t(), static_cast<unsigned long>(r));
  return Coefficient(Rational(bn * bm * fr)) * Coefficient::i_hbar(r);
}

// Normal-orders one single-dof word. Strategy: repeatedly locate the
// leftmost Q-run directly followed by a P-run and collapse the whole block
// with the closed-form identity above; every rewrite strictly reduces the
// number of inverted run boundaries, so this terminates.
inline std::map<std::pair<int, int>, Coefficient> normal_order_single_dof(Runs runs) {
  std::map<std::pair<int, int>, Coefficient> out;
  const auto accumulate = [&out](std::pair<int, int> key, Coefficient c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.try_emplace(key, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };

  merge_runs(runs);
  std::vector<std::pair<Runs, Coefficient>> work;
  work.emplace_back(std::move(runs), Coefficient(1));
  while (!work.empty()) {
    auto [rs, c] = std::move(work.back());
    work.pop_back();

    std::size_t i = 0;
    bool inverted = false;
    for (; i + 1 < rs.size(); ++i)
      if (rs[i].first == GenKind::position && rs[i + 1].first == GenKind::momentum) {
        inverted = true;
        break;
      }
    if (!inverted) {
      int p = 0, q = 0;
      for (const auto& [kind, count] : rs) (kind == GenKind::momentum ? p : q) += count;
      accumulate({p, q}, std::move(c));
      continue;
    }

    const int n = rs[i].second, m = rs[i + 1].second;
    for (int r = 0; r <= std::min(n, m); ++r) {
      Runs next(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(i));
      next.emplace_back(GenKind::momentum, m - r);
      next.emplace_back(GenKind::position, n - r);
      next.insert(next.end(), rs.begin() + static_cast<std::ptrdiff_t>(i) + 2, rs.end());
      merge_runs(next);
      work.emplace_back(std::move(next), c * reorder_term_factor(n, m, r));
    }
  }
  return out;
}

}  // namespace detail

// The unique normal-ordered representative of a free polynomial modulo the
// canonical commutation ideal. Letters of distinct degrees of freedom
// commute freely, so each word splits into independent single-dof words
// whose normal forms are recombined multiplicatively.
inline WeylElement normal_form(const FreePoly& poly) {
  const int f = poly.dof();
  WeylElement out(f);
  for (const auto& [word, coeff] : poly.terms()) {
    std::vector<detail::Runs> per_dof(f);
    for (Generator g : word) {
      auto& rs = per_dof[static_cast<std::size_t>(g.index) - 1];
      if (!rs.empty() && rs.back().first == g.kind)
        ++rs.back().second;
      else
        rs.emplace_back(g.kind, 1);
    }
    std::vector<std::pair<NormalMonomial, Coefficient>> acc;
    acc.emplace_back(NormalMonomial{{}, {}}, coeff);
    for (int k = 0; k < f; ++k) {
      auto part = detail::normal_order_single_dof(std::move(per_dof[k]));
      std::vector<std::pair<NormalMonomial, Coefficient>> next;
      next.reserve(acc.size() * part.size());
      for (const auto& [mono, c] : acc)
        for (const auto& [pq, pc] : part) {
          NormalMonomial grown = mono;
          grown.p_exp.push_back(pq.first);
          grown.q_exp.push_back(pq.second);
          next.emplace_back(std::move(grown), c * pc);
        }
      acc = std::move(next);
    }
    for (auto& [mono, c] : acc) out.add_term(std::move(mono), std::move(c));
  }
  return out;
}

// The canonical section: the normal-ordered free polynomial representing x.
// normal_form(lift(x)) == x for every x.
inline FreePoly lift(const WeylElement& x) {
  FreePoly out(x.dof());
  for (const auto& [mono, c] : x.terms()) out.add_term(mono.to_word(), c);
  return out;
}

inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.dof() != b.dof())
    throw std::invalid_argument("dimension mismatch: dof " + std::to_string(a.dof()) +
                                " vs " + std::to_string(b.dof()));
  return normal_form(lift(a) * lift(b));
}

// ab - ba in the quotient.
inline WeylElement commutator(const WeylElement& a, const WeylElement& b) {
  if (a.dof() != b.dof())
    throw std::invalid_argument("dimension mismatch in commutator");
  const FreePoly la = lift(a), lb = lift(b);
  return normal_form(la * lb - lb * la);
}

// [Q^n, P^m] for one degree of freedom, straight from the binomial closed
// form without any rewriting.
inline WeylElement closed_commutator(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative exponent");
  WeylElement out(1);
  for (int r = 1; r <= std::min(n, m); ++r)
    out.add_term(NormalMonomial{{m - r}, {n - r}}, detail::reorder_term_factor(n, m, r));
  return out;
}

// True iff every coefficient of x has lowest hbar exponent >= min_degree.
inline bool hbar_check(const WeylElement& x, int min_degree) {
  for (const auto& [mono, c] : x.terms())
    if (*c.min_hbar_degree() < min_degree) return false;
  return true;
}

// hbar-free test for free polynomials (used to pick test inputs).
inline bool hbar_check(const FreePoly& x, int min_degree) {
  for (const auto& [w, c] : x.terms())
    if (*c.min_hbar_degree() < min_degree) return false;
  return true;
}

// Generators of the canonical commutation ideal:
// Q_k Q_l - Q_l Q_k and P_k P_l - P_l P_k for k < l, and
// Q_k P_l - P_l Q_k - i hbar delta_{kl} for all k, l.
inline std::vector<FreePoly> ccr_ideal_generators(int dof) {
  std::vector<FreePoly> gens;
  const auto pair_word = [dof](Generator a, Generator b) {
    return FreePoly::monomial(dof, Word{a, b});
  };
  for (int k = 1; k <= dof; ++k)
    for (int l = 1; l <= dof; ++l) {
      if (k < l) {
        gens.push_back(pair_word(Q(k), Q(l)) - pair_word(Q(l), Q(k)));
        gens.push_back(pair_word(P(k), P(l)) - pair_word(P(l), P(k)));
      }
      FreePoly g = pair_word(Q(k), P(l)) - pair_word(P(l), Q(k));
      if (k == l) g -= FreePoly::constant(dof, Coefficient::i_hbar(1));
      gens.push_back(std::move(g));
    }
  return gens;
}

// Q_k and P_k as quotient elements.
inline WeylElement weyl_q(int dof, int index = 1) {
  NormalMonomial m = NormalMonomial::unit(dof);
  check_index(Q(index), dof);
  m.q_exp[index - 1] = 1;
  return WeylElement::monomial(dof, std::move(m));
}

inline WeylElement weyl_p(int dof, int index = 1) {
  NormalMonomial m = NormalMonomial::unit(dof);
  check_index(P(index), dof);
  m.p_exp[index - 1] = 1;
  return WeylElement::monomial(dof, std::move(m));
}

}  // namespace weyl
