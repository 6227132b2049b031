#include "pstwalk/rational_linalg.hpp"

#include <stdexcept>

namespace pstwalk {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int reduced_denominator(const Rat& r) { return r.get_den(); }

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        out.at(i, j) += aik * other.at(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("RationalMatrix: shape mismatch in sum");
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("RationalMatrix: shape mismatch in difference");
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rat& s) const {
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

std::vector<Rat> RationalMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RationalMatrix: apply size mismatch");
  std::vector<Rat> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat acc = 0;
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

std::optional<std::vector<Rat>> solve_linear_system(RationalMatrix a, std::vector<Rat> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("solve_linear_system: expects a square system");
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a.at(r, col) != 0) { pivot = r; break; }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(b[pivot], b[col]);
    }
    const Rat inv = Rat(1) / a.at(col, col);
    for (int j = col; j < n; ++j) a.at(col, j) *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rat f = a.at(r, col);
      if (f == 0) continue;
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
      b[r] -= f * b[col];
    }
  }
  return b;
}

int rational_rank(RationalMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (m.at(r, col) != 0) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    const Rat inv = Rat(1) / m.at(row, col);
    for (int j = col; j < cols; ++j) m.at(row, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row) continue;
      const Rat f = m.at(r, col);
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) m.at(r, j) -= f * m.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace pstwalk
