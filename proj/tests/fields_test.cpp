#include <catch2/catch_amalgamated.hpp>

#include "weyl/fields.hpp"
#include "weyl/hamiltonian.hpp"
#include "weyl/parse.hpp"
#include "weyl/random_gen.hpp"

using namespace weyl;

namespace {

ScalarField sf(const std::string& text, int dof = 1) {
  return normal_form(parse_expression(text, dof));
}

VectorField vf(std::vector<std::string> texts, int dof = 1) {
  std::vector<WeylElement> comps;
  for (const auto& t : texts) comps.push_back(sf(t, dof));
  return VectorField(std::move(comps));
}

bool all_zero(std::span<const WeylElement> comps) {
  for (const WeylElement& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

bool all_zero(const VectorField& field) { return all_zero(field.components()); }

}  // namespace

TEST_CASE("membership examples") {
  CHECK(check_vector_field(std::vector<WeylElement>{sf("2*P"), sf("-4*Q^3")}).ok());
  CHECK(check_vector_field(std::vector<WeylElement>{sf("1"), sf("0")}).ok());

  const auto report = check_vector_field(std::vector<WeylElement>{sf("Q"), sf("0")});
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].relation == CcrRelation::qp);
  CHECK(report.violations[0].residual == sf("i*hbar"));

  CHECK_THROWS_AS(check_vector_field(std::vector<WeylElement>{sf("Q")}),
                  std::invalid_argument);
}

TEST_CASE("membership for two degrees of freedom") {
  // The planar rotation field.
  CHECK(check_vector_field(std::vector<WeylElement>{sf("-1*Q_2", 2), sf("Q_1", 2),
                                                    sf("-1*P_2", 2), sf("P_1", 2)})
            .ok());
  // Mixed-index failure: (Q_2, 0, 0, 0).
  const auto report = check_vector_field(
      std::vector<WeylElement>{sf("Q_2", 2), sf("0", 2), sf("0", 2), sf("0", 2)});
  CHECK_FALSE(report.ok());
}

TEST_CASE("vector field construction certifies membership") {
  CHECK_NOTHROW(vf({"2*P", "-4*Q^3"}));
  try {
    vf({"Q", "0"});
    FAIL("expected NotAVectorField");
  } catch (const NotAVectorField& e) {
    REQUIRE(e.report.violations.size() == 1);
    CHECK(e.report.violations[0].residual == sf("i*hbar"));
  }
}

TEST_CASE("lie derivative examples") {
  CHECK(lie_derivative(vf({"2*P", "0"}), sf("Q^2")) == sf("4*P*Q + 2*i*hbar"));
  CHECK(lie_derivative(vf({"1", "0"}), sf("Q^3")) == sf("3*Q^2"));

  std::mt19937_64 rng(4001);
  for (int n = 0; n < 20; ++n) {
    const VectorField K = random_vector_field(rng, 1, 3);
    CHECK(lie_derivative(K, weyl_q(1)) == K.q_component(1));
    CHECK(lie_derivative(K, weyl_p(1)) == K.p_component(1));
  }
}

TEST_CASE("lie derivative rejects mismatched dimensions") {
  CHECK_THROWS_AS(lie_derivative(vf({"1", "0"}), sf("Q_1", 2)), std::invalid_argument);
}

TEST_CASE("lie bracket examples") {
  const VectorField k = vf({"2*P", "0"});
  CHECK(all_zero(lie_bracket(k, k)));

  const VectorField g = vf({"0", "-2*Q"});
  const VectorField kg = lie_bracket(k, g);
  CHECK(kg.q_component(1) == sf("4*Q"));
  CHECK(kg.p_component(1) == sf("-4*P"));

  CHECK(all_zero(lie_bracket(vf({"1", "0"}), vf({"0", "1"}))));
}

TEST_CASE("bracket closure on random members") {
  std::mt19937_64 rng(4002);
  for (int n = 0; n < 200; ++n) {
    const int f = n % 5 == 4 ? 2 : 1;
    const VectorField K = random_vector_field(rng, f, 3);
    const VectorField G = random_vector_field(rng, f, 3);
    const VectorField bracket = lie_bracket(K, G);  // constructor re-checks membership
    CHECK(check_vector_field(bracket.components()).ok());
  }
}

TEST_CASE("bracket antisymmetry and Jacobi identity") {
  std::mt19937_64 rng(4003);
  for (int n = 0; n < 30; ++n) {
    const VectorField K = random_vector_field(rng, 1, 3);
    const VectorField G = random_vector_field(rng, 1, 3);
    const VectorField H = random_vector_field(rng, 1, 3);

    const VectorField kg = lie_bracket(K, G), gk = lie_bracket(G, K);
    for (std::size_t i = 0; i < kg.components().size(); ++i)
      CHECK((kg.components()[i] + gk.components()[i]).is_zero());

    const VectorField j1 = lie_bracket(lie_bracket(K, G), H);
    const VectorField j2 = lie_bracket(lie_bracket(G, H), K);
    const VectorField j3 = lie_bracket(lie_bracket(H, K), G);
    for (std::size_t i = 0; i < j1.components().size(); ++i)
      CHECK((j1.components()[i] + j2.components()[i] + j3.components()[i]).is_zero());
  }
}

TEST_CASE("Lie derivative is a Lie algebra homomorphism") {
  std::mt19937_64 rng(4004);
  for (int n = 0; n < 40; ++n) {
    const int f = n % 4 == 3 ? 2 : 1;
    const VectorField K = random_vector_field(rng, f, 3);
    const VectorField G = random_vector_field(rng, f, 3);
    const ScalarField H = random_scalar_field(rng, f, 3);
    CHECK(lie_derivative(K, lie_derivative(G, H)) -
              lie_derivative(G, lie_derivative(K, H)) ==
          lie_derivative(lie_bracket(K, G), H));
  }
}

TEST_CASE("a field is recovered from its action on the coordinates") {
  std::mt19937_64 rng(4005);
  for (int n = 0; n < 20; ++n) {
    const int f = 1 + n % 2;
    const VectorField K = random_vector_field(rng, f, 3);
    std::vector<WeylElement> recovered;
    for (int k = 1; k <= f; ++k) recovered.push_back(lie_derivative(K, weyl_q(f, k)));
    for (int k = 1; k <= f; ++k) recovered.push_back(lie_derivative(K, weyl_p(f, k)));
    CHECK(VectorField(std::move(recovered)) == K);
  }
}

TEST_CASE("lie derivative is independent of representatives") {
  std::mt19937_64 rng(4006);
  for (int n = 0; n < 40; ++n) {
    const ScalarField H = random_scalar_field(rng, 1, 4);
    const VectorField K = random_vector_field(rng, 1, 3);
    const ScalarField reference = lie_derivative(K, H);

    const FreePoly h_rep = lift(H) + ideal_sample(rng(), 1, 2);
    std::vector<FreePoly> dirs;
    for (const WeylElement& c : K.components())
      dirs.push_back(lift(c) + ideal_sample(rng(), 1, 2));
    CHECK(normal_form(derivative(h_rep, dirs)) == reference);
  }
}

TEST_CASE("members satisfy the Cauchy-Riemann-like relation") {
  std::mt19937_64 rng(4007);
  const FreePoly unit = FreePoly::constant(1, Coefficient(1));
  for (int n = 0; n < 30; ++n) {
    const VectorField K = random_vector_field(rng, 1, 3);
    const WeylElement dkq = normal_form(partial(lift(K.q_component(1)), Q(), unit));
    const WeylElement dkp = normal_form(partial(lift(K.p_component(1)), P(), unit));
    CHECK((dkq + dkp).is_zero());
  }
}

TEST_CASE("naive partials are not representative independent") {
  const FreePoly h1 = parse_expression("Q*P - P*Q", 1);
  const FreePoly h2 = parse_expression("i*hbar", 1);
  const FreePoly v = parse_expression("Q", 1);
  REQUIRE(normal_form(h1) == normal_form(h2));
  const WeylElement d1 = normal_form(partial(h1, Q(), v));
  const WeylElement d2 = normal_form(partial(h2, Q(), v));
  CHECK(d1 == sf("i*hbar"));
  CHECK(d2.is_zero());
  CHECK(d1 != d2);
}
