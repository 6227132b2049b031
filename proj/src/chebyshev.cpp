#include "pstwalk/chebyshev.hpp"

#include <stdexcept>

namespace pstwalk {

double chebyshev_scalar(int tau, double x) {
  if (tau < 0) throw std::invalid_argument("chebyshev_scalar: negative order");
  if (tau == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int k = 2; k <= tau; ++k) {
    double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Eigen::MatrixXd chebyshev_matrix(int tau, const Eigen::MatrixXd& p) {
  if (tau < 0) throw std::invalid_argument("chebyshev_matrix: negative order");
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(p.rows(), p.cols());
  if (tau == 0) return id;
  Eigen::MatrixXd prev = id, cur = p;
  for (int k = 2; k <= tau; ++k) {
    Eigen::MatrixXd next = 2.0 * p * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalMatrix chebyshev_matrix_exact(int tau, const RationalMatrix& p) {
  if (tau < 0) throw std::invalid_argument("chebyshev_matrix_exact: negative order");
  const RationalMatrix id = RationalMatrix::identity(p.rows());
  if (tau == 0) return id;
  RationalMatrix prev = id, cur = p;
  for (int k = 2; k <= tau; ++k) {
    RationalMatrix next = (p * cur).scaled(Rat(2)) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ChebyshevColumnIterator::ChebyshevColumnIterator(const Eigen::MatrixXd& p,
                                                 const Eigen::VectorXd& e)
    : p_(p), prev_(e), cur_(e) {}

void ChebyshevColumnIterator::step() {
  if (k_ == 0) {
    cur_ = p_ * prev_;
  } else {
    Eigen::VectorXd next = 2.0 * (p_ * cur_) - prev_;
    prev_ = std::move(cur_);
    cur_ = std::move(next);
  }
  ++k_;
}

}  // namespace pstwalk
