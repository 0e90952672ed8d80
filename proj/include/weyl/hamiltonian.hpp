#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weyl/fields.hpp"

namespace weyl {

// Quotient partial derivatives (d/dQ_1..d/dQ_f, d/dP_1..d/dP_f) of a
// scalar field, computed on the normal-form representative with unit
// direction. Well-defined because the unit fields belong to the vector
// fields.
inline std::vector<ScalarField> grad_components(const ScalarField& H) {
  const int f = H.dof();
  const FreePoly rep = lift(H);
  const FreePoly one = FreePoly::constant(f, Coefficient(1));
  std::vector<ScalarField> out;
  out.reserve(2 * static_cast<std::size_t>(f));
  for (int k = 1; k <= f; ++k) out.push_back(normal_form(partial(rep, Q(k), one)));
  for (int k = 1; k <= f; ++k) out.push_back(normal_form(partial(rep, P(k), one)));
  return out;
}

// The abstract gradient dH: the covector field K |-> L_K(H), represented
// by its generating scalar field.
class GradientCovector {
 public:
  explicit GradientCovector(ScalarField H) : h_(std::move(H)) {}
  const ScalarField& generating_field() const { return h_; }
  int dof() const { return h_.dof(); }

 private:
  ScalarField h_;
};

inline GradientCovector grad(const ScalarField& H) { return GradientCovector(H); }

inline ScalarField covector_eval(const GradientCovector& w, const VectorField& K) {
  return lie_derivative(K, w.generating_field());
}

// The Noetherian operator: evaluates the covector on the canonical unit
// fields and swaps the blocks with a sign,
//   Theta[dH] = (dH/dP_1, ..., dH/dP_f, -dH/dQ_1, ..., -dH/dQ_f).
inline VectorField theta_apply(const GradientCovector& w) {
  const int f = w.dof();
  std::vector<ScalarField> g = grad_components(w.generating_field());
  std::vector<WeylElement> comps;
  comps.reserve(2 * static_cast<std::size_t>(f));
  for (int k = 0; k < f; ++k) comps.push_back(g[static_cast<std::size_t>(f + k)]);
  for (int k = 0; k < f; ++k) comps.push_back(-g[static_cast<std::size_t>(k)]);
  return VectorField(std::move(comps));
}

// The generator of the Heisenberg dynamics,
//   K = ((i/hbar)[H, Q_1], ..., (i/hbar)[H, Q_f],
//        (i/hbar)[H, P_1], ..., (i/hbar)[H, P_f]).
// Commutators gain one hbar degree over their operands, so the division is
// exact; this is asserted against the hbar filtration of H.
inline VectorField heisenberg_generator(const ScalarField& H) {
  const int f = H.dof();
  const Coefficient i_over_hbar(GaussianRational::i(), -1);
  std::vector<WeylElement> comps;
  comps.reserve(2 * static_cast<std::size_t>(f));
  int h_min = 0;
  for (const auto& [mono, c] : H.terms()) h_min = std::min(h_min, *c.min_hbar_degree());
  const auto component = [&](const WeylElement& x) {
    WeylElement comm = commutator(H, x);
    if (!hbar_check(comm, h_min + 1))
      throw std::logic_error("heisenberg_generator: commutator not hbar-divisible");
    return i_over_hbar * comm;
  };
  for (int k = 1; k <= f; ++k) comps.push_back(component(weyl_q(f, k)));
  for (int k = 1; k <= f; ++k) comps.push_back(component(weyl_p(f, k)));
  return VectorField(std::move(comps));
}

// Poisson-like bracket (F, H) |-> dH[Theta dF]. Antisymmetric and
// Jacobi-satisfying in the quotient; note the induced sign pb(Q, P) = -1.
inline ScalarField poisson_bracket(const ScalarField& F, const ScalarField& H) {
  return lie_derivative(theta_apply(grad(F)), H);
}

// The same pairing computed entirely in the free algebra, with no quotient
// anywhere: dF[~Theta dH] + dH[~Theta dF]. Nonzero results (e.g. F = PQP,
// H = Q^2) show that antisymmetry genuinely needs the commutation ideal.
inline FreePoly free_theta_pairing(const FreePoly& F, const FreePoly& H) {
  if (F.dof() != 1 || H.dof() != 1)
    throw std::invalid_argument("free_theta_pairing is defined for dof 1");
  const FreePoly one = FreePoly::constant(1, Coefficient(1));
  const FreePoly dFdQ = partial(F, Q(), one), dFdP = partial(F, P(), one);
  const FreePoly dHdQ = partial(H, Q(), one), dHdP = partial(H, P(), one);
  return partial(F, Q(), dHdP) - partial(F, P(), dHdQ) +
         partial(H, Q(), dFdP) - partial(H, P(), dFdQ);
}

inline bool is_conserved(const ScalarField& I, const VectorField& K) {
  return lie_derivative(K, I).is_zero();
}

class NotConserved : public std::runtime_error {
 public:
  explicit NotConserved(ScalarField r)
      : std::runtime_error("quantity is not conserved along the flow"), residual(std::move(r)) {}
  ScalarField residual;
};

// Noether correspondence: a conserved quantity I of the Heisenberg flow of
// H yields the symmetry G = Theta[dI]. The commuting of K and G is a
// theorem; it is recomputed here and enforced rather than assumed.
inline VectorField noether_symmetry(const ScalarField& H, const ScalarField& I) {
  const VectorField K = heisenberg_generator(H);
  ScalarField residual = lie_derivative(K, I);
  if (!residual.is_zero()) throw NotConserved(std::move(residual));
  VectorField G = theta_apply(grad(I));
  const VectorField bracket = lie_bracket(K, G);
  for (const WeylElement& c : bracket.components())
    if (!c.is_zero()) throw std::logic_error("noether_symmetry: bracket residual nonzero");
  return G;
}

struct NoetherianCheckResult {
  bool equal;
  std::vector<WeylElement> lhs;       // Theta d[dH[Theta dF]]
  std::vector<WeylElement> rhs;       // [[Theta dF, Theta dH]]
  std::vector<WeylElement> residual;  // lhs - rhs, component-wise
};

// Executable content of "Theta is Noetherian": for all F, H,
//   Theta d[dH[Theta dF]] = [[Theta dF, Theta dH]].
inline NoetherianCheckResult noetherian_identity_check(const ScalarField& F,
                                                       const ScalarField& H) {
  const VectorField lhs = theta_apply(grad(poisson_bracket(F, H)));
  const VectorField rhs = lie_bracket(theta_apply(grad(F)), theta_apply(grad(H)));
  NoetherianCheckResult out;
  out.lhs.assign(lhs.components().begin(), lhs.components().end());
  out.rhs.assign(rhs.components().begin(), rhs.components().end());
  out.equal = true;
  for (std::size_t i = 0; i < out.lhs.size(); ++i) {
    out.residual.push_back(out.lhs[i] - out.rhs[i]);
    if (!out.residual.back().is_zero()) out.equal = false;
  }
  return out;
}

// Formal Taylor flow u(t) = u + sum_j t^j c_j of the Heisenberg dynamics,
// with c_1 the generator and c_{j+1} = c_j'[K] / (j+1). The truncation
// preserves the commutation relations coefficient-wise through its order,
// which is checked for every constructed series.
struct FlowSeries {
  ScalarField hamiltonian;
  std::vector<std::vector<WeylElement>> coeffs;  // coeffs[j-1] = c_j, each 2f components

  int order() const { return static_cast<int>(coeffs.size()); }
  int dof() const { return hamiltonian.dof(); }
};

// t^order coefficient of the residual of one commutation relation along
// the truncated flow; c_0 is the base point (Q_1..Q_f, P_1..P_f).
inline WeylElement flow_ccr_residual(const FlowSeries& flow, CcrRelation relation, int k,
                                     int l, int t_order) {
  const int f = flow.dof();
  const auto coefficient = [&](int j, bool momentum, int index) -> WeylElement {
    if (j == 0) return momentum ? weyl_p(f, index) : weyl_q(f, index);
    const auto& c = flow.coeffs[static_cast<std::size_t>(j) - 1];
    return c[static_cast<std::size_t>(momentum ? f + index : index) - 1];
  };
  const bool a_momentum = relation == CcrRelation::pp;
  const bool b_momentum = relation != CcrRelation::qq;
  WeylElement out(f);
  for (int a = 0; a <= t_order; ++a) {
    const int b = t_order - a;
    if (a > flow.order() || b > flow.order()) continue;
    const WeylElement xa = coefficient(a, a_momentum, k);
    const WeylElement xb = coefficient(b, b_momentum, l);
    out += xa * xb - xb * xa;
  }
  if (relation == CcrRelation::qp && k == l && t_order == 0)
    out -= WeylElement::constant(f, Coefficient::i_hbar(1));
  return out;
}

inline bool flow_preserves_ccr(const FlowSeries& flow) {
  const int f = flow.dof();
  for (int j = 0; j <= flow.order(); ++j)
    for (int k = 1; k <= f; ++k)
      for (int l = 1; l <= f; ++l) {
        if (k < l) {
          if (!flow_ccr_residual(flow, CcrRelation::qq, k, l, j).is_zero()) return false;
          if (!flow_ccr_residual(flow, CcrRelation::pp, k, l, j).is_zero()) return false;
        }
        if (!flow_ccr_residual(flow, CcrRelation::qp, k, l, j).is_zero()) return false;
      }
  return true;
}

inline FlowSeries flow_taylor(const ScalarField& H, int order) {
  if (order < 1) throw std::invalid_argument("flow order must be >= 1");
  const VectorField K = heisenberg_generator(H);
  FlowSeries flow{H, {}};
  std::vector<WeylElement> current(K.components().begin(), K.components().end());
  flow.coeffs.push_back(current);
  for (int j = 1; j < order; ++j) {
    std::vector<WeylElement> next;
    next.reserve(current.size());
    const Coefficient inv(Rational(1, j + 1));
    for (const WeylElement& comp : current) next.push_back(inv * lie_derivative(K, comp));
    flow.coeffs.push_back(next);
    current = std::move(next);
  }
  if (!flow_preserves_ccr(flow))
    throw std::logic_error("flow_taylor: truncated flow violates a commutation relation");
  return flow;
}

}  // namespace weyl
