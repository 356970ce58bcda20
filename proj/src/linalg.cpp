#include "subst/linalg.hpp"

#include <utility>

namespace subst {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

Eigen::Index rank(const IntMatrix& input) {
  IntMatrix m = input;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  BigInt prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::vector<Eigen::Index> row_reduce(RatMatrix& m) {
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.row(p).swap(m.row(r));
    const Rational inv = Rational(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Eigen::Index rank(const RatMatrix& input) {
  RatMatrix m = input;
  return static_cast<Eigen::Index>(row_reduce(m).size());
}

RatMatrix kernel_basis(const RatMatrix& input) {
  RatMatrix m = input;
  const auto pivots = row_reduce(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  RatMatrix basis(n, n - static_cast<Eigen::Index>(pivots.size()));
  basis.setConstant(Rational(0));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(static_cast<Eigen::Index>(r), free);
    ++k;
  }
  return basis;
}

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (!r.is_zero()) {
    const BigInt q = old_r / r;
    old_r = old_r - q * r; std::swap(old_r, r);
    old_s = old_s - q * s; std::swap(old_s, s);
    old_t = old_t - q * t; std::swap(old_t, t);
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

IntMatrix integer_kernel_basis(const IntMatrix& input) {
  IntMatrix a = input;
  const Eigen::Index rows = a.rows(), n = a.cols();
  IntMatrix u = IntMatrix::Identity(n, n);
  Eigen::Index c = 0;
  for (Eigen::Index r = 0; r < rows && c < n; ++r) {
    for (Eigen::Index j = c + 1; j < n; ++j) {
      if (a(r, j).is_zero()) continue;
      if (a(r, c).is_zero()) {
        a.col(c).swap(a.col(j));
        u.col(c).swap(u.col(j));
        continue;
      }
      const BigInt x = a(r, c), y = a(r, j);
      const auto [g, s, t] = extended_gcd(x, y);
      const BigInt xg = x / g, yg = y / g;
      const IntVector ac = a.col(c), aj = a.col(j), uc = u.col(c), uj = u.col(j);
      a.col(c) = ac * s + aj * t;
      a.col(j) = aj * xg - ac * yg;
      u.col(c) = uc * s + uj * t;
      u.col(j) = uj * xg - uc * yg;
    }
    if (!a(r, c).is_zero()) ++c;
  }
  return u.rightCols(n - c);
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto pivots = row_reduce(aug);
  RatVector x = RatVector::Constant(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

bool IndependentSet::try_add(const RatVector& input) {
  RatVector v = input;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v(pivot_[k]);
    if (!f.is_zero()) v -= rows_[k] * f;
  }
  Eigen::Index p = 0;
  while (p < dimension_ && v(p).is_zero()) ++p;
  if (p == dimension_) return false;
  const Rational lead = v(p);
  v /= lead;
  // keep earlier rows reduced against the new pivot
  for (auto& row : rows_) {
    const Rational f = row(p);
    if (!f.is_zero()) row -= v * f;
  }
  rows_.push_back(std::move(v));
  pivot_.push_back(p);
  return true;
}

}  // namespace subst
