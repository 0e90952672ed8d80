#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weyl/weyl_element.hpp"

namespace weyl {

// Abstract scalar fields are exactly the quotient-algebra elements.
using ScalarField = WeylElement;

enum class CcrRelation { qq, pp, qp };

inline const char* to_string(CcrRelation r) {
  switch (r) {
    case CcrRelation::qq: return "qq";
    case CcrRelation::pp: return "pp";
    default: return "qp";
  }
}

// One failed membership identity, with the exact residual element.
struct MembershipViolation {
  CcrRelation relation;
  int k;
  int l;
  WeylElement residual;
};

struct MembershipReport {
  std::vector<MembershipViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Tests the defining identities of the vector fields on quantum phase
// space: a 2f-tuple (K_q1..K_qf, K_p1..K_pf) belongs when
//   [K_qk, Q_l] = [K_ql, Q_k],  [K_pk, P_l] = [K_pl, P_k],
//   [K_qk, P_l] = [K_pl, Q_k]
// hold in the quotient for all k, l. The first two families are trivial
// for k = l, so only k < l is checked there; the mixed family is checked
// for every ordered pair.
inline MembershipReport check_vector_field(std::span<const WeylElement> comps) {
  if (comps.size() % 2 != 0)
    throw std::invalid_argument("vector field needs 2f components, got " +
                                std::to_string(comps.size()));
  const int f = static_cast<int>(comps.size() / 2);
  for (const WeylElement& c : comps)
    if (c.dof() != f)
      throw std::invalid_argument("component dof " + std::to_string(c.dof()) +
                                  " does not match field dof " + std::to_string(f));
  MembershipReport report;
  const auto kq = [&](int k) -> const WeylElement& { return comps[k - 1]; };
  const auto kp = [&](int k) -> const WeylElement& { return comps[f + k - 1]; };
  for (int k = 1; k <= f; ++k)
    for (int l = k + 1; l <= f; ++l) {
      WeylElement rqq = commutator(kq(k), weyl_q(f, l)) - commutator(kq(l), weyl_q(f, k));
      if (!rqq.is_zero())
        report.violations.push_back({CcrRelation::qq, k, l, std::move(rqq)});
      WeylElement rpp = commutator(kp(k), weyl_p(f, l)) - commutator(kp(l), weyl_p(f, k));
      if (!rpp.is_zero())
        report.violations.push_back({CcrRelation::pp, k, l, std::move(rpp)});
    }
  for (int k = 1; k <= f; ++k)
    for (int l = 1; l <= f; ++l) {
      WeylElement rqp = commutator(kq(k), weyl_p(f, l)) - commutator(kp(l), weyl_q(f, k));
      if (!rqp.is_zero())
        report.violations.push_back({CcrRelation::qp, k, l, std::move(rqp)});
    }
  return report;
}

class NotAVectorField : public std::runtime_error {
 public:
  explicit NotAVectorField(MembershipReport r)
      : std::runtime_error("components do not form a vector field (" +
                           std::to_string(r.violations.size()) + " violated identities)"),
        report(std::move(r)) {}
  MembershipReport report;
};

// A certified member of the Lie algebra of abstract vector fields.
// Membership is established eagerly at construction; every consumer can
// then rely on the well-definedness theorems without re-checking.
class VectorField {
 public:
  explicit VectorField(std::vector<WeylElement> comps) : comps_(std::move(comps)) {
    MembershipReport report = check_vector_field(comps_);
    if (!report.ok()) throw NotAVectorField(std::move(report));
    dof_ = static_cast<int>(comps_.size() / 2);
  }

  int dof() const { return dof_; }
  // Only on lvalues: the span must not outlive the field.
  std::span<const WeylElement> components() const& { return comps_; }
  std::span<const WeylElement> components() && = delete;
  const WeylElement& q_component(int k) const { return comps_[static_cast<std::size_t>(k) - 1]; }
  const WeylElement& p_component(int k) const {
    return comps_[static_cast<std::size_t>(dof_ + k) - 1];
  }

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

 private:
  std::vector<WeylElement> comps_;
  int dof_;
};

// Lie derivative of a scalar field along a vector field: the directional
// derivative of any representative of H in the direction of any
// representatives of K, taken back to the quotient. Membership of K makes
// the result independent of all representative choices.
inline ScalarField lie_derivative(const VectorField& K, const ScalarField& H) {
  if (K.dof() != H.dof())
    throw std::invalid_argument("dimension mismatch in lie_derivative");
  std::vector<FreePoly> dirs;
  dirs.reserve(K.components().size());
  for (const WeylElement& c : K.components()) dirs.push_back(lift(c));
  return normal_form(derivative(lift(H), dirs));
}

// The field bracket (L_K G_i - L_G K_i)_i. Closure in the vector fields is
// a theorem; the constructor of the result re-certifies it anyway.
inline VectorField lie_bracket(const VectorField& K, const VectorField& G) {
  if (K.dof() != G.dof())
    throw std::invalid_argument("dimension mismatch in lie_bracket");
  std::vector<WeylElement> comps;
  comps.reserve(K.components().size());
  for (std::size_t i = 0; i < K.components().size(); ++i)
    comps.push_back(lie_derivative(K, G.components()[i]) -
                    lie_derivative(G, K.components()[i]));
  return VectorField(std::move(comps));
}

}  // namespace weyl
