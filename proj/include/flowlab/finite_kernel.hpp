#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "flowlab/finite_map.hpp"

namespace flowlab {

inline constexpr double kRowSumTolerance = 1e-12;

// Row-stochastic transition table on a finite label set. Rows whose sum
// deviates from 1 by less than 1e-12 are renormalized; larger deviation is
// treated as a logic error, not float noise.
class FiniteKernel {
 public:
  FiniteKernel() = default;

  explicit FiniteKernel(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
    if (rows_.rows() != rows_.cols())
      throw std::invalid_argument("FiniteKernel: non-square table");
    for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
      if ((rows_.row(i).array() < 0.0).any())
        throw std::invalid_argument("FiniteKernel: negative entry");
      const double s = rows_.row(i).sum();
      if (std::abs(s - 1.0) >= kRowSumTolerance)
        throw std::invalid_argument("FiniteKernel: row sum off by more than 1e-12");
      rows_.row(i) /= s;
    }
  }

  static FiniteKernel identity(int n) {
    return FiniteKernel(Eigen::MatrixXd::Identity(n, n));
  }

  static FiniteKernel uniform(int n) {
    return FiniteKernel(Eigen::MatrixXd::Constant(n, n, 1.0 / n));
  }

  // delta kernel of a map: K(x, .) = delta_{phi(x)}
  static FiniteKernel of_map(const FiniteMap& phi) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(phi.size(), phi.size());
    for (int i = 0; i < phi.size(); ++i) m(i, phi(i)) = 1.0;
    return FiniteKernel(std::move(m));
  }

  int size() const { return static_cast<int>(rows_.rows()); }
  const Eigen::MatrixXd& matrix() const { return rows_; }
  double operator()(int x, int y) const { return rows_(x, y); }

  bool operator==(const FiniteKernel& o) const { return rows_ == o.rows_; }

 private:
  Eigen::MatrixXd rows_;
};

// (Kf)(x) = sum_y K(x,y) f(y); linear in f, identity kernel acts as identity.
template <typename Derived>
Eigen::VectorXd kernel_action(const FiniteKernel& k,
                              const Eigen::MatrixBase<Derived>& f) {
  if (f.size() != k.size())
    throw std::invalid_argument("kernel_action: dimension mismatch");
  return k.matrix() * f;
}

// closure under products: left then right, (K_l K_r)f = K_l(K_r f)
inline FiniteKernel compose(const FiniteKernel& left, const FiniteKernel& right) {
  if (left.size() != right.size())
    throw std::invalid_argument("compose: size mismatch");
  return FiniteKernel(left.matrix() * right.matrix());
}

// P_t = exp(rate * t * (J - I)) by uniformization: the Taylor series of the
// scaled generator rearranged into a positive series of stochastic matrices,
// truncated once the Poisson tail is below 1e-13.
inline FiniteKernel exact_jump_semigroup(const FiniteKernel& jump, double rate,
                                         double t) {
  if (t < 0) throw std::invalid_argument("exact_jump_semigroup: t < 0");
  const int n = jump.size();
  const double mu = rate * t;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  double weight = std::exp(-mu);  // Poisson(mu) pmf at k = 0
  double mass = weight;
  acc += weight * power;
  for (int k = 1; k < 100000 && 1.0 - mass > 1e-13; ++k) {
    power = power * jump.matrix();
    weight *= mu / k;
    acc += weight * power;
    mass += weight;
  }
  return FiniteKernel(std::move(acc));  // deficit <= 1e-13, renormalized
}

}  // namespace flowlab
