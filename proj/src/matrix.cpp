#include "subst/matrix.hpp"

#include <vector>

#include "subst/error.hpp"
#include "subst/linalg.hpp"

namespace subst {

IntMatrix substitution_matrix(const Substitution& phi) {
  const auto l = static_cast<Eigen::Index>(phi.size());
  IntMatrix m = IntMatrix::Constant(l, l, BigInt(0));
  for (Eigen::Index j = 0; j < l; ++j)
    for (Letter a : phi[static_cast<std::size_t>(j)]) m(a, j) += 1;
  return m;
}

namespace {

using Pattern = std::vector<std::vector<bool>>;

Pattern pattern_product(const Pattern& a, const Pattern& b) {
  const std::size_t n = a.size();
  Pattern c(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) c[i][j] = true;
  return c;
}

std::size_t zero_count(const Pattern& p) {
  std::size_t z = 0;
  for (const auto& row : p)
    for (bool b : row) z += !b;
  return z;
}

}  // namespace

Primitivity is_primitive(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("matrix must be square");
  const auto n = static_cast<std::size_t>(m.rows());
  Pattern base(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int s = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).sign();
      if (s < 0) throw ContractViolation("primitivity needs a non-negative matrix");
      base[i][j] = s > 0;
    }
  const int wielandt = static_cast<int>((n - 1) * (n - 1) + 1);
  Pattern current = base;
  std::size_t zeros = zero_count(current);
  for (int p = 1;; ++p) {
    if (zeros == 0) return {true, p};
    if (p >= wielandt) return {false, 0};
    current = pattern_product(current, base);
    const std::size_t next = zero_count(current);
    if (next == zeros) return {false, 0};
    zeros = next;
  }
}

IntPolynomial char_poly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ContractViolation("matrix must be square");
  const Eigen::Index n = a.rows();
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix mk = IntMatrix::Constant(n, n, BigInt(0));
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = (a * mk).eval();
    for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const IntMatrix am = a * mk;
    c[static_cast<std::size_t>(n - k)] = -trace(am) / BigInt(static_cast<long long>(k));
  }
  return IntPolynomial(std::move(c));
}

Eigen::Index eventual_rank(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("matrix must be square");
  // The rank sequence of M^p is non-increasing and stabilizes once two
  // consecutive ranks agree, which happens by p = n.
  IntMatrix p = m;
  Eigen::Index r = rank(p);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    p = (p * m).eval();
    const Eigen::Index next = rank(p);
    if (next == r) return r;
    r = next;
  }
  return r;
}

}  // namespace subst
