#include <catch2/catch_amalgamated.hpp>

#include "weyl/hamiltonian.hpp"
#include "weyl/parse.hpp"
#include "weyl/random_gen.hpp"

using namespace weyl;

namespace {

ScalarField sf(const std::string& text, int dof = 1) {
  return normal_form(parse_expression(text, dof));
}

bool all_zero(std::span<const WeylElement> comps) {
  for (const WeylElement& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

bool all_zero(const VectorField& field) { return all_zero(field.components()); }

}  // namespace

TEST_CASE("gradient components") {
  const auto g1 = grad_components(sf("P^2 + Q^4"));
  REQUIRE(g1.size() == 2);
  CHECK(g1[0] == sf("4*Q^3"));
  CHECK(g1[1] == sf("2*P"));

  const auto g2 = grad_components(sf("Q*P + P*Q"));
  CHECK(g2[0] == sf("2*P"));
  CHECK(g2[1] == sf("2*Q"));

  const auto g3 = grad_components(sf("i*hbar"));
  CHECK(g3[0].is_zero());
  CHECK(g3[1].is_zero());
}

TEST_CASE("covector evaluation") {
  const VectorField unit_q(std::vector<WeylElement>{sf("1"), sf("0")});
  CHECK(covector_eval(grad(weyl_q(1)), unit_q) == sf("1"));

  const VectorField two_p(std::vector<WeylElement>{sf("2*P"), sf("0")});
  CHECK(covector_eval(grad(sf("Q^2")), two_p) == sf("4*P*Q + 2*i*hbar"));
  CHECK(covector_eval(grad(sf("Q^2")), two_p) == lie_derivative(two_p, sf("Q^2")));
}

TEST_CASE("a gradient annihilates its own Hamiltonian field") {
  CHECK(covector_eval(grad(sf("Q^2")), theta_apply(grad(sf("Q^2")))).is_zero());
  std::mt19937_64 rng(5001);
  for (int n = 0; n < 50; ++n) {
    const ScalarField H = random_scalar_field(rng, 1, 4);
    CHECK(covector_eval(grad(H), theta_apply(grad(H))).is_zero());
  }
}

TEST_CASE("theta on gradients") {
  const VectorField k = theta_apply(grad(sf("P^2 + Q^4")));
  CHECK(k.q_component(1) == sf("2*P"));
  CHECK(k.p_component(1) == sf("-4*Q^3"));

  const VectorField unit = theta_apply(grad(weyl_q(1)));
  CHECK(unit.q_component(1).is_zero());
  CHECK(unit.p_component(1) == sf("-1"));

  CHECK(all_zero(theta_apply(grad(sf("i*hbar")))));
}

TEST_CASE("theta lands in the vector fields on random scalars") {
  std::mt19937_64 rng(5002);
  for (int n = 0; n < 200; ++n) {
    const int f = n % 5 == 4 ? 2 : 1;
    const VectorField K = theta_apply(grad(random_scalar_field(rng, f, 5)));
    CHECK(check_vector_field(K.components()).ok());
  }
}

TEST_CASE("Heisenberg generator examples") {
  const VectorField anharmonic = heisenberg_generator(sf("P^2 + Q^4"));
  CHECK(anharmonic.q_component(1) == sf("2*P"));
  CHECK(anharmonic.p_component(1) == sf("-4*Q^3"));

  const VectorField harmonic = heisenberg_generator(sf("1/2 * (P^2 + Q^2)"));
  CHECK(harmonic.q_component(1) == sf("P"));
  CHECK(harmonic.p_component(1) == sf("-1*Q"));

  const VectorField free2 = heisenberg_generator(sf("P_1^2 + P_2^2", 2));
  CHECK(free2.q_component(1) == sf("2*P_1", 2));
  CHECK(free2.q_component(2) == sf("2*P_2", 2));
  CHECK(free2.p_component(1).is_zero());
  CHECK(free2.p_component(2).is_zero());
}

TEST_CASE("Heisenberg generator coincides with theta of the gradient") {
  std::mt19937_64 rng(5003);
  for (int n = 0; n < 50; ++n) {
    const int f = n % 4 == 3 ? 2 : 1;
    const ScalarField H = random_scalar_field(rng, f, 5);
    CHECK(heisenberg_generator(H) == theta_apply(grad(H)));
  }
}

TEST_CASE("commutator form of the quotient partials") {
  // (i/hbar)[H, Q] = +dH/dP and (i/hbar)[H, P] = -dH/dQ.
  std::mt19937_64 rng(5004);
  const Coefficient i_over_hbar(GaussianRational::i(), -1);
  for (int n = 0; n < 40; ++n) {
    const ScalarField H = random_scalar_field(rng, 1, 5);
    const auto g = grad_components(H);
    CHECK(i_over_hbar * commutator(H, weyl_q(1)) == g[1]);
    CHECK(i_over_hbar * commutator(H, weyl_p(1)) == -g[0]);
  }
}

TEST_CASE("Heisenberg generator is total on Laurent scalars") {
  // hbar^-1 * Q * P is a legal scalar field; the division stays exact.
  const ScalarField H = sf("hbar^-1 * Q * P");
  const VectorField K = heisenberg_generator(H);
  CHECK(K.q_component(1) == sf("hbar^-1 * Q"));
  CHECK(heisenberg_generator(H) == theta_apply(grad(H)));
}

TEST_CASE("poisson bracket examples") {
  CHECK(poisson_bracket(weyl_q(1), weyl_p(1)) == sf("-1"));
  CHECK(poisson_bracket(sf("Q^2"), sf("P*Q*P")) == sf("-4*P*Q^2 - 4*i*hbar*Q"));
  CHECK((poisson_bracket(sf("Q^2"), sf("P*Q*P")) +
         poisson_bracket(sf("P*Q*P"), sf("Q^2")))
            .is_zero());

  std::mt19937_64 rng(5005);
  for (int n = 0; n < 20; ++n) {
    const ScalarField F = random_scalar_field(rng, 1, 4);
    CHECK(poisson_bracket(F, F).is_zero());
  }
}

TEST_CASE("poisson bracket laws on random fields") {
  std::mt19937_64 rng(5006);
  for (int n = 0; n < 30; ++n) {
    const ScalarField F = random_scalar_field(rng, 1, 4);
    const ScalarField G = random_scalar_field(rng, 1, 4);
    const ScalarField H = random_scalar_field(rng, 1, 4);
    CHECK((poisson_bracket(F, G) + poisson_bracket(G, F)).is_zero());
    CHECK((poisson_bracket(poisson_bracket(F, G), H) +
           poisson_bracket(poisson_bracket(G, H), F) +
           poisson_bracket(poisson_bracket(H, F), G))
              .is_zero());
  }
}

TEST_CASE("free-algebra pairing fails to be antisymmetric") {
  const FreePoly F = parse_expression("P*Q*P", 1);
  const FreePoly H = parse_expression("Q^2", 1);
  const FreePoly expected = parse_expression("2*Q*P*Q - Q^2*P - P*Q^2", 1);
  const FreePoly pairing = free_theta_pairing(F, H);
  CHECK(pairing == expected);
  CHECK_FALSE(pairing.is_zero());
  CHECK(normal_form(pairing).is_zero());

  // Diagonal with only Q letters, and the constant-cancelling pair.
  const FreePoly q3 = parse_expression("Q^3 + 2*Q", 1);
  CHECK(free_theta_pairing(q3, q3).is_zero());
  CHECK(free_theta_pairing(parse_expression("Q", 1), parse_expression("P", 1)).is_zero());
}

TEST_CASE("mixed unit partials exchange in the quotient") {
  const FreePoly one = FreePoly::constant(1, Coefficient(1));
  const auto pq_monomial = [](int m, int n) {
    Word w;
    w.insert(w.end(), m, P());
    w.insert(w.end(), n, Q());
    return FreePoly::monomial(1, std::move(w));
  };
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int M = 0; M <= 4; ++M)
        for (int N = 0; N <= 4; ++N) {
          const FreePoly a = pq_monomial(m, n), b = pq_monomial(M, N);
          CHECK(normal_form(partial(a, Q(), partial(b, P(), one))) ==
                normal_form(partial(b, P(), partial(a, Q(), one))));
        }
  // Without the quotient both documented pairs fail.
  for (const FreePoly& b :
       {pq_monomial(3, 0), FreePoly::monomial(1, {P(), Q(), P()})}) {
    const FreePoly a = pq_monomial(0, 2);
    CHECK(partial(a, Q(), partial(b, P(), one)) !=
          partial(b, P(), partial(a, Q(), one)));
  }
}

TEST_CASE("conserved quantities") {
  const ScalarField H = sf("P^2 + Q^4");
  CHECK(is_conserved(H, heisenberg_generator(H)));

  CHECK(is_conserved(sf("Q_1*P_2 - Q_2*P_1", 2),
                     heisenberg_generator(sf("P_1^2 + P_2^2", 2))));

  CHECK_FALSE(is_conserved(weyl_q(1), heisenberg_generator(sf("P^2"))));
  CHECK(lie_derivative(heisenberg_generator(sf("P^2")), weyl_q(1)) == sf("2*P"));
}

TEST_CASE("noether symmetry construction") {
  SECTION("the Hamiltonian is its own symmetry source") {
    const ScalarField H = sf("P^2 + Q^4");
    CHECK(noether_symmetry(H, H) == heisenberg_generator(H));
  }
  SECTION("planar rotation invariant") {
    const VectorField G =
        noether_symmetry(sf("P_1^2 + P_2^2", 2), sf("Q_1*P_2 - Q_2*P_1", 2));
    CHECK(G.q_component(1) == sf("-1*Q_2", 2));
    CHECK(G.q_component(2) == sf("Q_1", 2));
    CHECK(G.p_component(1) == sf("-1*P_2", 2));
    CHECK(G.p_component(2) == sf("P_1", 2));
    const VectorField K = heisenberg_generator(sf("P_1^2 + P_2^2", 2));
    CHECK(all_zero(lie_bracket(K, G)));
  }
  SECTION("translation invariant of the free particle") {
    const VectorField G = noether_symmetry(sf("P^2"), weyl_p(1));
    CHECK(G.q_component(1) == sf("1"));
    CHECK(G.p_component(1).is_zero());
  }
  SECTION("violated precondition reports the residual") {
    try {
      noether_symmetry(sf("P^2"), weyl_q(1));
      FAIL("expected NotConserved");
    } catch (const NotConserved& e) {
      CHECK(e.residual == sf("2*P"));
    }
  }
  SECTION("random Hamiltonians as their own invariants") {
    std::mt19937_64 rng(5007);
    for (int n = 0; n < 20; ++n) {
      const ScalarField H = random_scalar_field(rng, 1, 4);
      const VectorField K = heisenberg_generator(H);
      CHECK(all_zero(lie_bracket(K, noether_symmetry(H, H))));
    }
  }
}

TEST_CASE("noetherian identity") {
  const auto frozen = noetherian_identity_check(sf("P^2"), sf("Q^2"));
  REQUIRE(frozen.equal);
  REQUIRE(frozen.lhs.size() == 2);
  CHECK(frozen.lhs[0] == sf("4*Q"));
  CHECK(frozen.lhs[1] == sf("-4*P"));

  const ScalarField F = sf("Q^3 + P*Q");
  CHECK(noetherian_identity_check(F, F).equal);

  std::mt19937_64 rng(5008);
  for (int n = 0; n < 25; ++n) {
    const ScalarField a = random_scalar_field(rng, 1, 4);
    const ScalarField b = random_scalar_field(rng, 1, 4);
    const auto result = noetherian_identity_check(a, b);
    CHECK(result.equal);
    CHECK(all_zero(result.residual));
  }
}

TEST_CASE("taylor flow of the free particle") {
  const FlowSeries flow = flow_taylor(sf("P^2"), 2);
  REQUIRE(flow.order() == 2);
  CHECK(flow.coeffs[0][0] == sf("2*P"));
  CHECK(flow.coeffs[0][1].is_zero());
  CHECK(flow.coeffs[1][0].is_zero());
  CHECK(flow.coeffs[1][1].is_zero());
}

TEST_CASE("taylor flow of the harmonic oscillator") {
  const FlowSeries flow = flow_taylor(sf("1/2 * (P^2 + Q^2)"), 3);
  CHECK(flow.coeffs[0][0] == sf("P"));
  CHECK(flow.coeffs[0][1] == sf("-1*Q"));
  CHECK(flow.coeffs[1][0] == sf("-1/2*Q"));
  CHECK(flow.coeffs[1][1] == sf("-1/2*P"));
  CHECK(flow.coeffs[2][0] == sf("-1/6*P"));
  CHECK(flow.coeffs[2][1] == sf("1/6*Q"));
}

TEST_CASE("taylor flows preserve the commutation relations") {
  for (const char* text : {"P^2", "1/2 * (P^2 + Q^2)", "P^2 + Q^4"}) {
    const FlowSeries flow = flow_taylor(sf(text), 4);
    CHECK(flow_preserves_ccr(flow));
  }
  CHECK_THROWS_AS(flow_taylor(sf("P^2"), 0), std::invalid_argument);
}

TEST_CASE("gradients of invariants are invariant covectors") {
  // (L_K dI)[G] = L_K(dI[G]) - dI[[[K, G]]] vanishes for conserved I.
  std::mt19937_64 rng(5009);
  const ScalarField H = sf("P^2 + Q^4");
  const VectorField K = heisenberg_generator(H);
  for (int n = 0; n < 20; ++n) {
    const VectorField G = random_vector_field(rng, 1, 3);
    const ScalarField lhs = lie_derivative(K, covector_eval(grad(H), G)) -
                            covector_eval(grad(H), lie_bracket(K, G));
    CHECK(lhs.is_zero());
  }
}
