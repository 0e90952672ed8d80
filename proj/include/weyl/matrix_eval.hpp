#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weyl/free_poly.hpp"

namespace weyl {

// Dense square matrix over the Gaussian rationals. Identity testing is
// exact equality, never a tolerance.
class ExactMatrix {
 public:
  explicit ExactMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  }

  static ExactMatrix identity(int dim) {
    ExactMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = GaussianRational(1);
    return m;
  }

  static ExactMatrix scalar(int dim, const GaussianRational& value) {
    ExactMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = value;
    return m;
  }

  int dim() const { return dim_; }

  GaussianRational& at(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }
  const GaussianRational& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  bool is_symmetric() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  ExactMatrix& operator+=(const ExactMatrix& o) {
    check_dim(o);
    for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] += o.entries_[n];
    return *this;
  }
  ExactMatrix& operator-=(const ExactMatrix& o) {
    check_dim(o);
    for (std::size_t n = 0; n < entries_.size(); ++n) entries_[n] -= o.entries_[n];
    return *this;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    a.check_dim(b);
    ExactMatrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        const GaussianRational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& m) {
    ExactMatrix out(m.dim_);
    for (std::size_t n = 0; n < m.entries_.size(); ++n) out.entries_[n] = s * m.entries_[n];
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

 private:
  void check_dim(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  }

  int dim_;
  std::vector<GaussianRational> entries_;
};

// A finite-dimensional substitution point: one matrix per generator plus a
// concrete value for the central symbol hbar (default 1).
struct Assignment {
  int dim = 1;
  GaussianRational hbar = GaussianRational(1);
  std::map<Generator, ExactMatrix> matrices;
};

namespace detail {

inline std::vector<ExactMatrix> assignment_vector(const FreePoly& p, const Assignment& a,
                                                  const char* what) {
  std::set<Generator> used;
  for (const auto& [w, c] : p.terms()) used.insert(w.begin(), w.end());
  for (Generator g : used) {
    auto it = a.matrices.find(g);
    if (it == a.matrices.end())
      throw std::invalid_argument(std::string(what) + ": no matrix for generator " +
                                  to_string(g));
    if (it->second.dim() != a.dim)
      throw std::invalid_argument(std::string(what) + ": dimension mismatch for " +
                                  to_string(g));
  }
  const ExactMatrix filler(a.dim);
  std::vector<ExactMatrix> point(2 * static_cast<std::size_t>(p.dof()), filler);
  for (const auto& [g, m] : a.matrices) {
    if (g.index < 1 || g.index > p.dof()) continue;
    point[static_cast<std::size_t>(direction_slot(g, p.dof()))] = m;
  }
  return point;
}

}  // namespace detail

// Homomorphic evaluation of a free polynomial at an assignment; hbar is
// substituted by the assignment value inside every coefficient.
inline ExactMatrix eval_free(const FreePoly& p, const Assignment& a) {
  const auto point = detail::assignment_vector(p, a, "eval_free");
  return evaluate<ExactMatrix>(p, point, [&a](const Coefficient& c) {
    return ExactMatrix::scalar(a.dim, c.eval_hbar(a.hbar));
  });
}

// Evaluation of the symbolic derivative: one occurrence at a time is
// replaced by the matching direction matrix.
inline ExactMatrix eval_derivative(const FreePoly& p, const Assignment& point,
                                   const Assignment& directions) {
  if (point.dim != directions.dim)
    throw std::invalid_argument("eval_derivative: point/direction dimension mismatch");
  const auto pt = detail::assignment_vector(p, point, "eval_derivative(point)");
  const auto dir = detail::assignment_vector(p, directions, "eval_derivative(directions)");
  return evaluate_derivative<ExactMatrix>(p, pt, dir, [&point](const Coefficient& c) {
    return ExactMatrix::scalar(point.dim, c.eval_hbar(point.hbar));
  });
}

// Symmetrized random integer matrix (M + M^T)/2 with entries of M uniform
// in [-bound, bound].
inline ExactMatrix random_symmetric_matrix(int dim, std::mt19937_64& rng, long bound = 4) {
  ExactMatrix m(dim);
  const unsigned long span = 2 * static_cast<unsigned long>(bound) + 1;
  const auto draw = [&] {
    return GaussianRational(Rational(static_cast<long>(rng() % span) - bound));
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = draw();
  const GaussianRational half(Rational(1, 2));
  return half * (m + m.transpose());
}

// The matrix size at which distinct free polynomials of degree d are
// guaranteed separable by some symmetric assignment.
inline int separation_dimension(const FreePoly& p, const FreePoly& q) {
  const int d = std::max({p.degree(), q.degree(), 0});
  return d / 2 + 1;
}

// Searches for a symmetric-matrix assignment on which p and q evaluate
// differently. Returns the witness, or nothing once the attempt budget is
// exhausted (or immediately when p == q).
inline std::optional<Assignment> separate(const FreePoly& p, const FreePoly& q,
                                          std::uint64_t rng_seed, int attempts) {
  if (p.dof() != q.dof()) throw std::invalid_argument("separate: dimension mismatch");
  if (p == q) return std::nullopt;
  const int dim = separation_dimension(p, q);
  std::mt19937_64 rng(rng_seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Assignment a;
    a.dim = dim;
    for (int k = 1; k <= p.dof(); ++k) {
      a.matrices.emplace(Q(k), random_symmetric_matrix(dim, rng));
      a.matrices.emplace(P(k), random_symmetric_matrix(dim, rng));
    }
    if (eval_free(p, a) != eval_free(q, a)) return a;
  }
  return std::nullopt;
}

// The two sides of Hall's identity, (XY - YX)^2 Z and Z (XY - YX)^2, as
// free polynomials in the three letters X = Q_1, Y = P_1, Z = Q_2. They
// differ in the free algebra yet agree on all 2x2 matrices.
inline std::pair<FreePoly, FreePoly> hall_identity_pair() {
  const FreePoly x = FreePoly::generator_poly(2, Q(1));
  const FreePoly y = FreePoly::generator_poly(2, P(1));
  const FreePoly z = FreePoly::generator_poly(2, Q(2));
  const FreePoly square = pow(x * y - y * x, 2);
  return {square * z, z * square};
}

}  // namespace weyl
