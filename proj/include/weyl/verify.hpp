#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weyl/hamiltonian.hpp"
#include "weyl/json_io.hpp"
#include "weyl/matrix_eval.hpp"
#include "weyl/parse.hpp"
#include "weyl/print.hpp"
#include "weyl/random_gen.hpp"

namespace weyl {

struct VerifyResult {
  std::string name;
  bool pass;
  std::string detail;
};

// Closed-form commutator [Q^n, P^m] against the rewriting route, plus the
// single-power specializations [Q^n, P] = n i hbar Q^{n-1} and
// [Q, P^m] = m i hbar P^{m-1}.
inline VerifyResult verify_commutation(int max_exponent = 8) {
  const auto q_power = [](int n) {
    return WeylElement::monomial(1, NormalMonomial{{0}, {n}});
  };
  const auto p_power = [](int m) {
    return WeylElement::monomial(1, NormalMonomial{{m}, {0}});
  };
  int checked = 0;
  for (int n = 0; n <= max_exponent; ++n)
    for (int m = 0; m <= max_exponent; ++m, ++checked)
      if (closed_commutator(n, m) != commutator(q_power(n), p_power(m)))
        return {"commutation", false,
                "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m)};
  for (int n = 1; n <= 12; ++n) {
    const WeylElement expect =
        WeylElement::monomial(1, NormalMonomial{{0}, {n - 1}},
                              Coefficient(Rational(n)) * Coefficient::i_hbar(1));
    if (commutator(q_power(n), p_power(1)) != expect)
      return {"commutation", false, "single-power Q case failed at n=" + std::to_string(n)};
    const WeylElement expect_p =
        WeylElement::monomial(1, NormalMonomial{{n - 1}, {0}},
                              Coefficient(Rational(n)) * Coefficient::i_hbar(1));
    if (commutator(q_power(1), p_power(n)) != expect_p)
      return {"commutation", false, "single-power P case failed at m=" + std::to_string(n)};
  }
  return {"commutation", true,
          std::to_string(checked) + " exponent pairs up to " + std::to_string(max_exponent) +
              " plus single-power sweeps to 12"};
}

// Antisymmetry and the Jacobi identity of the Poisson-like bracket on
// seeded random scalar fields, exact.
inline VerifyResult verify_brackets(std::uint64_t seed = 101, int pairs = 200,
                                    int triples = 100, int max_degree = 4) {
  std::mt19937_64 rng(seed);
  for (int n = 0; n < pairs; ++n) {
    const ScalarField F = random_scalar_field(rng, 1, max_degree);
    const ScalarField H = random_scalar_field(rng, 1, max_degree);
    if (!(poisson_bracket(F, H) + poisson_bracket(H, F)).is_zero())
      return {"brackets", false, "antisymmetry failed at pair " + std::to_string(n)};
  }
  for (int n = 0; n < triples; ++n) {
    const ScalarField F = random_scalar_field(rng, 1, max_degree);
    const ScalarField G = random_scalar_field(rng, 1, max_degree);
    const ScalarField H = random_scalar_field(rng, 1, max_degree);
    const ScalarField jacobi = poisson_bracket(poisson_bracket(F, G), H) +
                               poisson_bracket(poisson_bracket(G, H), F) +
                               poisson_bracket(poisson_bracket(H, F), G);
    if (!jacobi.is_zero())
      return {"brackets", false, "Jacobi failed at triple " + std::to_string(n)};
  }
  return {"brackets", true,
          std::to_string(pairs) + " antisymmetry pairs, " + std::to_string(triples) +
              " Jacobi triples, degree <= " + std::to_string(max_degree)};
}

// L_K L_G - L_G L_K = L_[[K,G]] on seeded random fields.
inline VerifyResult verify_homomorphism(std::uint64_t seed = 102, int cases = 100,
                                        int max_degree = 3) {
  std::mt19937_64 rng(seed);
  for (int n = 0; n < cases; ++n) {
    const int f = n % 4 == 3 ? 2 : 1;
    const VectorField K = random_vector_field(rng, f, max_degree);
    const VectorField G = random_vector_field(rng, f, max_degree);
    const ScalarField H = random_scalar_field(rng, f, max_degree);
    const ScalarField lhs =
        lie_derivative(K, lie_derivative(G, H)) - lie_derivative(G, lie_derivative(K, H));
    const ScalarField rhs = lie_derivative(lie_bracket(K, G), H);
    if (lhs != rhs)
      return {"homomorphism", false, "failed at case " + std::to_string(n)};
  }
  return {"homomorphism", true, std::to_string(cases) + " random (K, G, H) cases"};
}

// Exchange of the two mixed unit partials for A = P^m Q^n, B = P^M Q^N in
// the quotient, together with the free-algebra failures that show the
// quotient is necessary.
inline VerifyResult verify_mixed_partials(int max_exponent = 5) {
  const FreePoly one = FreePoly::constant(1, Coefficient(1));
  const auto pq_monomial = [](int m, int n) {
    Word w;
    w.insert(w.end(), m, P());
    w.insert(w.end(), n, Q());
    return FreePoly::monomial(1, std::move(w));
  };
  for (int m = 0; m <= max_exponent; ++m)
    for (int n = 0; n <= max_exponent; ++n)
      for (int M = 0; M <= max_exponent; ++M)
        for (int N = 0; N <= max_exponent; ++N) {
          const FreePoly a = pq_monomial(m, n), b = pq_monomial(M, N);
          const FreePoly lhs = partial(a, Q(), partial(b, P(), one));
          const FreePoly rhs = partial(b, P(), partial(a, Q(), one));
          if (normal_form(lhs) != normal_form(rhs))
            return {"mixed-partials", false,
                    "quotient equality failed at (" + std::to_string(m) + "," +
                        std::to_string(n) + "," + std::to_string(M) + "," +
                        std::to_string(N) + ")"};
        }
  // Free-algebra counterexamples: A = Q^2 against B = P^3 and B = P Q P.
  const FreePoly a = pq_monomial(0, 2);
  for (const FreePoly& b : {pq_monomial(3, 0), FreePoly::monomial(1, {P(), Q(), P()})}) {
    const FreePoly lhs = partial(a, Q(), partial(b, P(), one));
    const FreePoly rhs = partial(b, P(), partial(a, Q(), one));
    if (lhs == rhs)
      return {"mixed-partials", false, "free-algebra counterexample unexpectedly agrees"};
  }
  return {"mixed-partials", true,
          "all exponents <= " + std::to_string(max_exponent) +
              ", free-algebra counterexamples reproduced"};
}

// Noether correspondence: I = H always gives back the generator as its own
// symmetry, and the planar rotation invariant of the free two-particle
// Hamiltonian commutes with the flow.
inline VerifyResult verify_noether(std::uint64_t seed = 103, int cases = 50,
                                   int max_degree = 4) {
  std::mt19937_64 rng(seed);
  for (int n = 0; n < cases; ++n) {
    const ScalarField H = random_scalar_field(rng, 1, max_degree);
    const VectorField K = heisenberg_generator(H);
    if (!is_conserved(H, K))
      return {"noether", false, "H not conserved along its own flow at case " + std::to_string(n)};
    const VectorField G = noether_symmetry(H, H);  // enforces [[K, G]] = 0
    if (G != K)
      return {"noether", false, "Theta[dH] differs from the generator at case " + std::to_string(n)};
  }
  const ScalarField H2 = normal_form(parse_expression("P_1^2 + P_2^2", 2));
  const ScalarField I2 = normal_form(parse_expression("Q_1*P_2 - Q_2*P_1", 2));
  const VectorField G2 = noether_symmetry(H2, I2);
  const std::vector<WeylElement> expected{-weyl_q(2, 2), weyl_q(2, 1), -weyl_p(2, 2),
                                          weyl_p(2, 1)};
  if (!std::equal(G2.components().begin(), G2.components().end(), expected.begin(),
                  expected.end()))
    return {"noether", false, "rotation symmetry has unexpected components"};
  return {"noether", true,
          std::to_string(cases) + " diagonal cases plus the rotation invariant"};
}

// Theta d[dH[Theta dF]] = [[Theta dF, Theta dH]] on seeded random pairs.
inline VerifyResult verify_noetherian(std::uint64_t seed = 104, int cases = 50,
                                      int max_degree = 4) {
  std::mt19937_64 rng(seed);
  for (int n = 0; n < cases; ++n) {
    const ScalarField F = random_scalar_field(rng, 1, max_degree);
    const ScalarField H = random_scalar_field(rng, 1, max_degree);
    if (!noetherian_identity_check(F, H).equal)
      return {"noetherian", false, "identity failed at case " + std::to_string(n)};
  }
  return {"noetherian", true, std::to_string(cases) + " random pairs"};
}

// Formal Taylor flows preserve every commutation relation through the
// truncation order (flow_taylor aborts on violation; re-checked here).
inline VerifyResult verify_flow(int order = 5) {
  const char* hamiltonians[] = {"P^2", "1/2 * (P^2 + Q^2)", "P^2 + Q^4"};
  for (const char* text : hamiltonians) {
    const FlowSeries flow = flow_taylor(normal_form(parse_expression(text, 1)), order);
    if (!flow_preserves_ccr(flow))
      return {"flow", false, std::string("residual found for H = ") + text};
  }
  return {"flow", true, std::string("orders up to ") + std::to_string(order) +
                            " for P^2, (P^2+Q^2)/2, P^2+Q^4"};
}

// Representative independence of the Lie derivative and of the quotient
// partials under random ideal perturbations, plus the naive-partial
// counterexample that motivates both.
inline VerifyResult verify_welldefined(std::uint64_t seed = 105, int cases = 100,
                                       int max_degree = 4) {
  std::mt19937_64 rng(seed);
  const FreePoly one = FreePoly::constant(1, Coefficient(1));
  for (int n = 0; n < cases; ++n) {
    const ScalarField H = random_scalar_field(rng, 1, max_degree);
    const VectorField K = random_vector_field(rng, 1, 3);
    const ScalarField reference = lie_derivative(K, H);

    const FreePoly h_rep = lift(H) + ideal_sample(rng(), 1, 2);
    std::vector<FreePoly> dirs;
    for (const WeylElement& c : K.components()) dirs.push_back(lift(c) + ideal_sample(rng(), 1, 2));
    if (normal_form(derivative(h_rep, dirs)) != reference)
      return {"welldefined", false, "Lie derivative changed at case " + std::to_string(n)};

    const auto grads = grad_components(H);
    if (normal_form(partial(h_rep, Q(), one)) != grads[0] ||
        normal_form(partial(h_rep, P(), one)) != grads[1])
      return {"welldefined", false, "gradient changed at case " + std::to_string(n)};
  }
  // Naive partials are not representative independent: Q P - P Q and
  // i hbar agree in the quotient, their Q-partials along Q do not.
  const FreePoly h1 = parse_expression("Q*P - P*Q", 1);
  const FreePoly h2 = parse_expression("i*hbar", 1);
  const FreePoly v = parse_expression("Q", 1);
  if (normal_form(h1) != normal_form(h2))
    return {"welldefined", false, "counterexample inputs are not congruent"};
  if (normal_form(partial(h1, Q(), v)) == normal_form(partial(h2, Q(), v)))
    return {"welldefined", false, "naive partials unexpectedly agree"};
  return {"welldefined", true,
          std::to_string(cases) + " perturbed cases plus the naive-partial counterexample"};
}

// Hall's identity (XY - YX)^2 Z = Z (XY - YX)^2 on random 2x2 triples,
// and a 3x3 triple separating the two sides.
inline VerifyResult verify_hall(std::uint64_t seed = 106, int cases = 100,
                                int attempts = 50) {
  const auto [left, right] = hall_identity_pair();
  std::mt19937_64 rng(seed);
  for (int n = 0; n < cases; ++n) {
    Assignment a;
    a.dim = 2;
    for (Generator g : {Q(1), P(1), Q(2)}) {
      ExactMatrix m(2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = GaussianRational(random_rational(rng));
      a.matrices.emplace(g, std::move(m));
    }
    if (eval_free(left, a) != eval_free(right, a))
      return {"hall", false, "identity failed on a 2x2 triple at case " + std::to_string(n)};
  }
  for (int n = 0; n < attempts; ++n) {
    Assignment a;
    a.dim = 3;
    for (Generator g : {Q(1), P(1), Q(2)}) {
      ExactMatrix m(3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = GaussianRational(random_rational(rng));
      a.matrices.emplace(g, std::move(m));
    }
    if (eval_free(left, a) != eval_free(right, a))
      return {"hall", true,
              std::to_string(cases) + " 2x2 triples, 3x3 witness at attempt " +
                  std::to_string(n + 1)};
  }
  return {"hall", false, "no 3x3 witness found"};
}

// Random distinct free polynomials are separated by symmetric matrices of
// the guaranteed dimension within the attempt budget.
inline VerifyResult verify_separation(std::uint64_t seed = 107, int pairs = 50,
                                      int max_degree = 6, int attempts = 20) {
  std::mt19937_64 rng(seed);
  for (int n = 0; n < pairs; ++n) {
    FreePoly p(1), q(1);
    do {
      p = random_free_poly(rng, 1, max_degree, 4);
      q = random_free_poly(rng, 1, max_degree, 4);
    } while (p == q);
    if (!separate(p, q, rng(), attempts))
      return {"separate", false, "no witness for pair " + std::to_string(n)};
  }
  return {"separate", true,
          std::to_string(pairs) + " pairs, degree <= " + std::to_string(max_degree) +
              ", dimension floor(d/2)+1"};
}

// Text and JSON round trips on seeded random elements, byte-identical on
// re-serialization.
inline VerifyResult verify_roundtrip(std::uint64_t seed = 108, int cases = 500) {
  std::mt19937_64 rng(seed);
  for (int n = 0; n < cases; ++n) {
    const int f = 1 + n % 3;
    if (n % 2 == 0) {
      const FreePoly p = random_free_poly(rng, f, 4, 4, -2, 2);
      const std::string text = print_canonical(p);
      if (parse_expression(text, f) != p)
        return {"roundtrip", false, "free text round trip failed: " + text};
      const Json j = to_json(p);
      if (free_poly_from_json(j) != p || to_json(free_poly_from_json(j)).dump() != j.dump())
        return {"roundtrip", false, "free JSON round trip failed at case " + std::to_string(n)};
    } else {
      const WeylElement x = random_weyl_element(rng, f, 4, 4, -2, 2);
      const std::string text = print_canonical(x);
      if (normal_form(parse_expression(text, f)) != x)
        return {"roundtrip", false, "weyl text round trip failed: " + text};
      const Json j = to_json(x);
      if (weyl_element_from_json(j) != x ||
          to_json(weyl_element_from_json(j)).dump() != j.dump())
        return {"roundtrip", false, "weyl JSON round trip failed at case " + std::to_string(n)};
    }
  }
  return {"roundtrip", true, std::to_string(cases) + " cases, byte-identical re-serialization"};
}

struct VerifyRequest {
  std::string name;
  std::optional<std::uint64_t> seed;
  std::optional<int> max;
  std::optional<int> cases;
  std::optional<int> attempts;
};

// Dispatches a named suite ("all" runs everything). Unknown names throw.
inline std::vector<VerifyResult> run_verify(const VerifyRequest& r) {
  const auto pick = [](const std::optional<int>& v, int fallback) {
    return v.value_or(fallback);
  };
  const auto seed = [&](std::uint64_t fallback) { return r.seed.value_or(fallback); };
  std::vector<VerifyResult> out;
  const bool all = r.name == "all";
  const auto wants = [&](std::initializer_list<const char*> names) {
    if (all) return true;
    for (const char* n : names)
      if (r.name == n) return true;
    return false;
  };
  if (wants({"commutation", "lemVertrel", "closed-commutator"}))
    out.push_back(verify_commutation(pick(r.max, 8)));
  if (wants({"brackets"})) {
    const int pairs = pick(r.cases, 200);
    out.push_back(verify_brackets(seed(101), pairs, std::max(1, pairs / 2), pick(r.max, 4)));
  }
  if (wants({"homomorphism"}))
    out.push_back(verify_homomorphism(seed(102), pick(r.cases, 100), pick(r.max, 3)));
  if (wants({"mixed-partials", "proHilfssatz"}))
    out.push_back(verify_mixed_partials(pick(r.max, 5)));
  if (wants({"noether"})) out.push_back(verify_noether(seed(103), pick(r.cases, 50), pick(r.max, 4)));
  if (wants({"noetherian"}))
    out.push_back(verify_noetherian(seed(104), pick(r.cases, 50), pick(r.max, 4)));
  if (wants({"flow"})) out.push_back(verify_flow(pick(r.max, 5)));
  if (wants({"welldefined"}))
    out.push_back(verify_welldefined(seed(105), pick(r.cases, 100), pick(r.max, 4)));
  if (wants({"hall"}))
    out.push_back(verify_hall(seed(106), pick(r.cases, 100), pick(r.attempts, 50)));
  if (wants({"separate"}))
    out.push_back(verify_separation(seed(107), pick(r.cases, 50), pick(r.max, 6),
                                    pick(r.attempts, 20)));
  if (wants({"roundtrip"})) out.push_back(verify_roundtrip(seed(108), pick(r.cases, 500)));
  if (out.empty()) throw std::invalid_argument("unknown verify suite: '" + r.name + "'");
  return out;
}

}  // namespace weyl
