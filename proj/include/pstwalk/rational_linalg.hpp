#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace pstwalk {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational from a numerator/denominator pair.
Rat make_rat(const Int& num, const Int& den);

// Denominator of r in lowest terms (always positive).
Int reduced_denominator(const Rat& r);

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// Dense rational matrix, row-major. Just enough exact linear algebra for
// the cyclotomic layer and the rational shadow of the matrix polynomial
// recurrence; sizes stay desk-scale so plain Gaussian elimination is fine.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix scaled(const Rat& s) const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

// Solves A x = b exactly. Returns nullopt when A is singular.
std::optional<std::vector<Rat>> solve_linear_system(RationalMatrix a, std::vector<Rat> b);

// Exact rank over the rationals.
int rational_rank(RationalMatrix m);

}  // namespace pstwalk
