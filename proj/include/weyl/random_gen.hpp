#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weyl/fields.hpp"
#include "weyl/hamiltonian.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

namespace detail {

// Unbiased draw from [0, n) independent of the standard library's
// distribution implementations, so seeded streams are stable.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline long ranged(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(bounded(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace detail

// Rational with numerator in [-9, 9] and denominator in [1, 9].
inline Rational random_rational(std::mt19937_64& rng) {
  Rational r(detail::ranged(rng, -9, 9), detail::ranged(rng, 1, 9));
  r.canonicalize();
  return r;
}

inline GaussianRational random_gaussian(std::mt19937_64& rng, bool allow_imaginary = true) {
  GaussianRational g(random_rational(rng));
  if (allow_imaginary && detail::bounded(rng, 2) == 0) g.im = random_rational(rng);
  return g;
}

// Nonzero coefficient with hbar powers drawn from [min_hbar, max_hbar].
inline Coefficient random_coefficient(std::mt19937_64& rng, int min_hbar = 0,
                                      int max_hbar = 0) {
  Coefficient c;
  do {
    c = Coefficient(random_gaussian(rng),
                    static_cast<int>(detail::ranged(rng, min_hbar, max_hbar)));
  } while (c.is_zero());
  return c;
}

inline Word random_word(std::mt19937_64& rng, int dof, int max_degree) {
  Word w;
  if (dof == 0) return w;
  const long len = detail::ranged(rng, 0, max_degree);
  for (long n = 0; n < len; ++n) {
    const int index = static_cast<int>(detail::ranged(rng, 1, dof));
    w.push_back(detail::bounded(rng, 2) == 0 ? Q(index) : P(index));
  }
  return w;
}

inline FreePoly random_free_poly(std::mt19937_64& rng, int dof, int max_degree,
                                 int max_terms, int min_hbar = 0, int max_hbar = 0) {
  FreePoly p(dof);
  const long terms = detail::ranged(rng, 1, max_terms);
  for (long t = 0; t < terms; ++t)
    p.add_term(random_word(rng, dof, max_degree), random_coefficient(rng, min_hbar, max_hbar));
  return p;
}

inline WeylElement random_weyl_element(std::mt19937_64& rng, int dof, int max_degree,
                                       int max_terms, int min_hbar = 0, int max_hbar = 0) {
  WeylElement x(dof);
  const long terms = detail::ranged(rng, 1, max_terms);
  for (long t = 0; t < terms; ++t) {
    NormalMonomial m = NormalMonomial::unit(dof);
    if (dof > 0) {
      long budget = detail::ranged(rng, 0, max_degree);
      while (budget-- > 0) {
        const std::size_t k = detail::bounded(rng, static_cast<std::uint64_t>(dof));
        if (detail::bounded(rng, 2) == 0)
          ++m.p_exp[k];
        else
          ++m.q_exp[k];
      }
    }
    x.add_term(std::move(m), random_coefficient(rng, min_hbar, max_hbar));
  }
  return x;
}

// Random element of the commutation ideal: a finite sum of random monomial
// sandwiches u * g * v around random ideal generators g. Its normal form
// is zero by construction.
inline FreePoly ideal_sample(std::uint64_t rng_seed, int dof, int max_degree) {
  std::mt19937_64 rng(rng_seed);
  const std::vector<FreePoly> gens = ccr_ideal_generators(dof);
  FreePoly out(dof);
  if (gens.empty()) return out;
  const long terms = detail::ranged(rng, 1, 3);
  for (long t = 0; t < terms; ++t) {
    const FreePoly& g = gens[detail::bounded(rng, gens.size())];
    const FreePoly u =
        FreePoly::monomial(dof, random_word(rng, dof, max_degree), random_coefficient(rng));
    const FreePoly v = FreePoly::monomial(dof, random_word(rng, dof, max_degree));
    out += u * g * v;
  }
  return out;
}

// hbar-free random scalar field, the stock Hamiltonian supply for tests.
inline ScalarField random_scalar_field(std::mt19937_64& rng, int dof, int max_degree,
                                       int max_terms = 4) {
  return random_weyl_element(rng, dof, max_degree, max_terms);
}

// Random member of the vector fields: the Heisenberg generator of a random
// Hamiltonian plus constant components. Membership is guaranteed by
// construction instead of rejection sampling.
inline VectorField random_vector_field(std::mt19937_64& rng, int dof, int max_degree) {
  const VectorField base = heisenberg_generator(random_scalar_field(rng, dof, max_degree + 1));
  std::vector<WeylElement> comps(base.components().begin(), base.components().end());
  for (WeylElement& c : comps)
    if (detail::bounded(rng, 2) == 0)
      c += WeylElement::constant(dof, Coefficient(random_rational(rng)));
  return VectorField(std::move(comps));
}

}  // namespace weyl
