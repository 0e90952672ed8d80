#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "weyl/random_gen.hpp"
#include "weyl/weyl_element.hpp"

using namespace weyl;
namespace wt = weyl::testing;

namespace {

FreePoly mono(std::initializer_list<Generator> gens, Coefficient c = Coefficient(1),
              int dof = 1) {
  return FreePoly::monomial(dof, Word(gens), std::move(c));
}

WeylElement nm(int p, int q, Coefficient c = Coefficient(1)) {
  return WeylElement::monomial(1, NormalMonomial{{p}, {q}}, std::move(c));
}

}  // namespace

TEST_CASE("normal form of QP") {
  CHECK(normal_form(mono({Q(), P()})) == nm(1, 1) + WeylElement::constant(1, Coefficient::i_hbar(1)));
}

TEST_CASE("normal form of Q^2 P^2") {
  const WeylElement expected = nm(2, 2) +
                               nm(1, 1, Coefficient(4) * Coefficient::i_hbar(1)) +
                               nm(0, 0, Coefficient(-2) * Coefficient::hbar(2));
  CHECK(normal_form(mono({Q(), Q(), P(), P()})) == expected);
}

TEST_CASE("2QPQ - Q^2P - PQ^2 lies in the ideal") {
  const FreePoly p = Coefficient(2) * mono({Q(), P(), Q()}) - mono({Q(), Q(), P()}) -
                     mono({P(), Q(), Q()});
  CHECK(normal_form(p).is_zero());
}

TEST_CASE("the ideal generator normalizes to zero") {
  const FreePoly g = mono({Q(), P()}) - mono({P(), Q()}) -
                     FreePoly::constant(1, Coefficient::i_hbar(1));
  CHECK(normal_form(g).is_zero());
}

TEST_CASE("normal form agrees with the single-swap oracle") {
  std::mt19937_64 rng(3001);
  for (int n = 0; n < 60; ++n) {
    const int f = 1 + n % 3;
    const FreePoly p = random_free_poly(rng, f, 6, 4, -1, 1);
    CHECK(normal_form(p) == wt::oracle_normal_form(p));
  }
}

TEST_CASE("rewriting is confluent under randomized rewrite order") {
  std::mt19937_64 rng(3002);
  for (int n = 0; n < 25; ++n) {
    const int f = 1 + n % 2;
    const FreePoly p = random_free_poly(rng, f, 6, 3);
    const WeylElement reference = normal_form(p);
    for (std::uint64_t fuzz = 0; fuzz < 4; ++fuzz)
      CHECK(wt::oracle_normal_form(p, wt::SwapPolicy::random_site, rng()) == reference);
  }
}

TEST_CASE("lift is a section of normal_form") {
  CHECK(lift(WeylElement(1)).is_zero());
  const WeylElement x = nm(1, 1) + WeylElement::constant(1, Coefficient::i_hbar(1));
  CHECK(lift(x) == mono({P(), Q()}) + FreePoly::constant(1, Coefficient::i_hbar(1)));

  std::mt19937_64 rng(3003);
  for (int n = 0; n < 50; ++n) {
    const int f = 1 + n % 3;
    const WeylElement y = random_weyl_element(rng, f, 5, 4, -1, 2);
    CHECK(normal_form(lift(y)) == y);
  }
}

TEST_CASE("quotient arithmetic") {
  const WeylElement q = weyl_q(1), p = weyl_p(1);
  CHECK(q * p == nm(1, 1) + WeylElement::constant(1, Coefficient::i_hbar(1)));
  CHECK(p * q == nm(1, 1));
  CHECK(nm(1, 1) * nm(1, 1) == nm(2, 2) + nm(1, 1, Coefficient::i_hbar(1)));
  CHECK_THROWS_AS(weyl_q(1) * weyl_q(2, 2), std::invalid_argument);
}

TEST_CASE("normal_form is an algebra homomorphism") {
  std::mt19937_64 rng(3004);
  for (int n = 0; n < 40; ++n) {
    const int f = 1 + n % 2;
    const FreePoly a = random_free_poly(rng, f, 4, 3);
    const FreePoly b = random_free_poly(rng, f, 4, 3);
    CHECK(normal_form(a * b) == normal_form(a) * normal_form(b));
    CHECK(normal_form(a + b) == normal_form(a) + normal_form(b));
  }
}

TEST_CASE("commutator examples") {
  CHECK(commutator(weyl_q(1), weyl_p(1)) ==
        WeylElement::constant(1, Coefficient::i_hbar(1)));
  CHECK(commutator(nm(0, 3), weyl_p(1)) == nm(0, 2, Coefficient(3) * Coefficient::i_hbar(1)));
  CHECK(commutator(weyl_q(1), weyl_q(1)).is_zero());
}

TEST_CASE("closed commutator matches the rewriting route") {
  CHECK(closed_commutator(1, 1) == WeylElement::constant(1, Coefficient::i_hbar(1)));
  CHECK(closed_commutator(2, 2) ==
        nm(1, 1, Coefficient(4) * Coefficient::i_hbar(1)) +
            nm(0, 0, Coefficient(-2) * Coefficient::hbar(2)));
  CHECK(closed_commutator(4, 0).is_zero());
  CHECK(closed_commutator(0, 4).is_zero());
  CHECK_THROWS_AS(closed_commutator(-1, 2), std::invalid_argument);

  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m)
      CHECK(closed_commutator(n, m) == commutator(nm(0, n), nm(m, 0)));
}

TEST_CASE("single-power commutation identities") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(commutator(nm(0, n), weyl_p(1)) ==
          nm(0, n - 1, Coefficient(n) * Coefficient::i_hbar(1)));
    CHECK(commutator(weyl_q(1), nm(n, 0)) ==
          nm(n - 1, 0, Coefficient(n) * Coefficient::i_hbar(1)));
  }
}

TEST_CASE("hbar filtration of commutators") {
  CHECK(hbar_check(commutator(weyl_q(1), weyl_p(1)), 1));
  CHECK_FALSE(hbar_check(weyl_q(1), 1));
  CHECK(hbar_check(WeylElement(1), 5));  // zero passes vacuously

  std::mt19937_64 rng(3005);
  for (int n = 0; n < 40; ++n) {
    const int f = 1 + n % 2;
    const WeylElement a = random_weyl_element(rng, f, 4, 3);
    const WeylElement b = random_weyl_element(rng, f, 4, 3);
    REQUIRE(hbar_check(a, 0));
    CHECK(hbar_check(commutator(a, b), 1));  // commutative modulo hbar
  }

  // Exhaustively over all normal monomial pairs of degree <= 3.
  std::vector<WeylElement> small;
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 3; ++q) small.push_back(nm(p, q));
  for (const WeylElement& a : small)
    for (const WeylElement& b : small) CHECK(hbar_check(commutator(a, b), 1));
}

TEST_CASE("ideal samples normalize to zero") {
  const auto gens = ccr_ideal_generators(1);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0] == mono({Q(), P()}) - mono({P(), Q()}) -
                       FreePoly::constant(1, Coefficient::i_hbar(1)));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    CHECK(normal_form(ideal_sample(seed, 1, 3)).is_zero());
    CHECK(normal_form(ideal_sample(seed, 2, 3)).is_zero());
    CHECK(normal_form(ideal_sample(seed, 3, 2)).is_zero());
  }
}

TEST_CASE("cross-index ideal generators for f = 2") {
  // Q_1 P_2 - P_2 Q_1 normalizes to zero: distinct dofs commute.
  const FreePoly g = mono({Q(1), P(2)}, Coefficient(1), 2) - mono({P(2), Q(1)}, Coefficient(1), 2);
  CHECK(normal_form(g).is_zero());
  const auto gens = ccr_ideal_generators(2);
  CHECK(gens.size() == 6);
  for (const FreePoly& gen : gens) CHECK(normal_form(gen).is_zero());
}

TEST_CASE("representative independence") {
  std::mt19937_64 rng(3006);
  for (int n = 0; n < 40; ++n) {
    const int f = 1 + n % 2;
    const WeylElement x = random_weyl_element(rng, f, 4, 3, -1, 1);
    const FreePoly j = ideal_sample(rng(), f, 3);
    CHECK(normal_form(lift(x) + j) == x);
  }
}

TEST_CASE("monomial order matches the graded-lex order of lifted words") {
  std::mt19937_64 rng(3007);
  const NormalMonomialLess less;
  const WordGradedLess word_less;
  for (int n = 0; n < 300; ++n) {
    const int f = 1 + n % 3;
    const auto draw = [&] {
      NormalMonomial m = NormalMonomial::unit(f);
      for (int d = 0; d < 5; ++d) {
        const std::size_t k = rng() % static_cast<std::uint64_t>(f);
        if (rng() % 3 == 0) continue;
        (rng() % 2 ? m.p_exp : m.q_exp)[k] += 1;
      }
      return m;
    };
    const NormalMonomial a = draw(), b = draw();
    CHECK(less(a, b) == word_less(a.to_word(), b.to_word()));
    CHECK_FALSE(less(a, a));
  }
}

TEST_CASE("ideal samples are deterministic for a fixed seed") {
  CHECK(ideal_sample(42, 2, 3) == ideal_sample(42, 2, 3));
}

TEST_CASE("degree of a quotient element is the normal-form degree") {
  CHECK(WeylElement(1).degree() == -1);
  CHECK(WeylElement::constant(1, Coefficient(4)).degree() == 0);
  CHECK((nm(2, 1) + nm(0, 1)).degree() == 3);
  // Q^2 P^2 has degree 4 even though lower-degree terms appear.
  CHECK(normal_form(mono({Q(), Q(), P(), P()})).degree() == 4);
}
