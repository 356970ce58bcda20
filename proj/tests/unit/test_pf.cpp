#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "named.hpp"
#include "subst/error.hpp"
#include "subst/matrix.hpp"
#include "subst/pf.hpp"

using namespace subst;
using named::sub;

namespace {

// M r = lambda r and l^T M = lambda l^T, evaluated in the field.
void check_residuals(const IntMatrix& m, const PFData& pf) {
  const NumberField& k = pf.field;
  const auto n = static_cast<std::size_t>(m.rows());
  const auto lambda = pf.lambda_element();
  for (std::size_t i = 0; i < n; ++i) {
    NumberField::Element mr, lm;
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = RatPolynomial::constant(Rational(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
      const auto ji = RatPolynomial::constant(Rational(m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))));
      mr = k.add(mr, k.mul(ij, pf.right[j]));
      lm = k.add(lm, k.mul(pf.left[j], ji));
    }
    CHECK(k.sub(mr, k.mul(lambda, pf.right[i])).is_zero());
    CHECK(k.sub(lm, k.mul(lambda, pf.left[i])).is_zero());
    CHECK(k.sign(pf.right[i]) > 0);
    CHECK(k.sign(pf.left[i]) > 0);
  }
  NumberField::Element total;
  bool has_one = false;
  for (std::size_t i = 0; i < n; ++i) {
    total = k.add(total, pf.right[i]);
    CHECK(k.compare(pf.left[i], RatPolynomial::constant(Rational(1))) >= 0);
    if (k.sub(pf.left[i], RatPolynomial::constant(Rational(1))).is_zero()) has_one = true;
  }
  CHECK(total == RatPolynomial::constant(Rational(1)));
  CHECK(has_one);
}

}  // namespace

TEST_CASE("Rudin-Shapiro PF data is exact") {
  const IntMatrix m = substitution_matrix(sub(named::kRudinShapiro));
  const PFData pf = pf_data(m);
  CHECK(pf.minimal_polynomial() == IntPolynomial({BigInt(-2), BigInt(1)}));
  for (const auto& x : pf.left) CHECK(x == RatPolynomial::constant(Rational(1)));
  for (const auto& x : pf.right) CHECK(x == RatPolynomial::constant(Rational(1, 4)));
  check_residuals(m, pf);
}

TEST_CASE("irrational PF data") {
  const PFData fib = pf_data(substitution_matrix(sub(named::kFibonacci)));
  CHECK(fib.field.to_decimal(fib.lambda_element(), 6) == "1.61803");
  CHECK(fib.field.degree() == 2);
  check_residuals(substitution_matrix(sub(named::kFibonacci)), fib);

  const IntMatrix trib = substitution_matrix(sub(named::kTribonacci));
  const PFData t = pf_data(trib);
  CHECK(t.field.to_decimal(t.lambda_element(), 6) == "1.83929");
  check_residuals(trib, t);

  // reducible characteristic polynomial: Thue-Morse, lambda = 2
  const PFData tm = pf_data(substitution_matrix(sub(named::kThueMorse)));
  CHECK(tm.field.degree() == 1);
  check_residuals(substitution_matrix(sub(named::kThueMorse)), tm);

  CHECK_THROWS_AS(pf_data(substitution_matrix(sub(named::kChacon))), Refused);
}

TEST_CASE("PF eigenvalue matches a numeric eigen solver") {
  for (const char* s : {"0012,12,20", "01,02,031,0", "0001,001", "00112,12,0201", named::kRecordA, named::kRecordB}) {
    const IntMatrix m = substitution_matrix(sub(s));
    const PFData pf = pf_data(m);
    check_residuals(m, pf);
    Eigen::MatrixXd d(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).to_double();
    double best = 0;
    const Eigen::EigenSolver<Eigen::MatrixXd> es(d, false);
    for (Eigen::Index i = 0; i < d.rows(); ++i) best = std::max(best, std::abs(es.eigenvalues()(i)));
    const Interval iv = pf.field.enclose(pf.lambda_element(), Rational(1, 1000000000));
    CHECK(iv.lo.to_double() <= best + 1e-9);
    CHECK(iv.hi.to_double() >= best - 1e-9);
  }
}
