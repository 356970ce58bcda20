#pragma once

// Exact elimination on Eigen matrices over BigInt and Rational.

#include <optional>
#include <vector>

#include "subst/scalar.hpp"

namespace subst {

template <typename Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& m, int p) {
  Matrix<Scalar> result = Matrix<Scalar>::Identity(m.rows(), m.cols());
  for (int i = 0; i < p; ++i) result = (result * m).eval();
  return result;
}

template <typename Scalar>
Scalar trace(const Matrix<Scalar>& m) {
  Scalar t(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

// Rank by fraction-free (Bareiss) elimination.
Eigen::Index rank(const IntMatrix& m);
Eigen::Index rank(const RatMatrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> row_reduce(RatMatrix& m);

// Columns span the kernel over Q.
RatMatrix kernel_basis(const RatMatrix& m);

// Columns form a Z-basis of {v in Z^n : m v = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& m);

// Some solution of a x = b, if one exists.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

// Greedy selection of linearly independent vectors over Q.
class IndependentSet {
 public:
  explicit IndependentSet(Eigen::Index dimension) : dimension_(dimension) {}
  // Adds v if it is independent of the vectors kept so far.
  bool try_add(const RatVector& v);
  Eigen::Index size() const { return static_cast<Eigen::Index>(rows_.size()); }

 private:
  Eigen::Index dimension_;
  std::vector<RatVector> rows_;  // echelon rows, pivot_[k] is the pivot of rows_[k]
  std::vector<Eigen::Index> pivot_;
};

struct ExtendedGcd {
  BigInt g, s, t;  // g = s a + t b, g >= 0
};
ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

}  // namespace subst
