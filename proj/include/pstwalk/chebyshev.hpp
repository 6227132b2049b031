#pragma once

// First-kind Chebyshev evaluation: T_0 = 1, T_1 = x,
// T_k = 2x T_{k-1} - T_{k-2}, on scalars, floating-point matrices and
// rational matrices. The matrix paths run the same three-term recurrence.

#include <Eigen/Dense>

#include "pstwalk/rational_linalg.hpp"

namespace pstwalk {

double chebyshev_scalar(int tau, double x);

Eigen::MatrixXd chebyshev_matrix(int tau, const Eigen::MatrixXd& p);

RationalMatrix chebyshev_matrix_exact(int tau, const RationalMatrix& p);

// Incremental column evaluation: maintains T_k(P) e and steps k by one.
// Keeps minimum-time searches at O(V^2) per step.
class ChebyshevColumnIterator {
 public:
  ChebyshevColumnIterator(const Eigen::MatrixXd& p, const Eigen::VectorXd& e);

  int k() const { return k_; }
  const Eigen::VectorXd& current() const { return cur_; }
  void step();

 private:
  const Eigen::MatrixXd& p_;
  Eigen::VectorXd prev_;
  Eigen::VectorXd cur_;
  int k_ = 0;
};

}  // namespace pstwalk
