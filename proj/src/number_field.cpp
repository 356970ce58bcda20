#include "subst/number_field.hpp"

#include <algorithm>

#include "subst/error.hpp"

namespace subst {

NumberField::NumberField(IntPolynomial minimal, Interval root)
    : minimal_(std::move(minimal)), modulus_(to_rational(minimal_)), root_(std::move(root)) {
  if (minimal_.degree() < 1) throw ContractViolation("number field needs a polynomial of degree at least 1");
  modulus_ = (Rational(1) / modulus_.leading()) * modulus_;
}

NumberField::Element NumberField::inverse(const Element& a) const {
  if (a.is_zero()) throw ContractViolation("inverse of zero in number field");
  // extended Euclid: s a + t m = 1
  RatPolynomial r0 = modulus_, r1 = a, s0, s1 = RatPolynomial::constant(Rational(1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw ContractViolation("element not invertible: polynomial is not irreducible");
  return reduce((Rational(1) / r1.leading()) * s1);
}

namespace {

struct RatRange {
  Rational lo, hi;
};

RatRange mul_range(const RatRange& a, const RatRange& b) {
  const Rational c[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(std::begin(c), std::end(c)), *std::max_element(std::begin(c), std::end(c))};
}

}  // namespace

Interval NumberField::enclosure_on(const Element& a, const Interval& x) const {
  RatRange acc{Rational(0), Rational(0)};
  const RatRange xr{x.lo, x.hi};
  for (int i = a.degree(); i >= 0; --i) {
    acc = mul_range(acc, xr);
    acc.lo += a.coeff(i);
    acc.hi += a.coeff(i);
  }
  return {acc.lo, acc.hi};
}

int NumberField::sign(const Element& a) const {
  if (a.is_zero()) return 0;
  if (a.degree() == 0) return a.coeff(0).sign();
  // a(lambda) != 0 because the minimal polynomial is irreducible, so
  // refinement eventually separates the enclosure from zero.
  Interval x = root_;
  for (int step = 0;; ++step) {
    const Interval e = enclosure_on(a, x);
    if (e.lo.sign() > 0) return 1;
    if (e.hi.sign() < 0) return -1;
    if (step > 4000) throw UndecidedExact("sign refinement did not converge");
    x = refine(minimal_, x, (x.hi - x.lo) / Rational(16));
  }
}

Interval NumberField::enclose(const Element& a, const Rational& width) const {
  Interval x = root_;
  for (int step = 0;; ++step) {
    const Interval e = enclosure_on(a, x);
    if (e.hi - e.lo <= width) return e;
    if (step > 4000) throw UndecidedExact("enclosure refinement did not converge");
    x = refine(minimal_, x, (x.hi - x.lo) / Rational(16));
  }
}

std::string NumberField::to_decimal(const Element& a, int digits) const {
  if (a.degree() <= 0) return subst::to_decimal(a.coeff(0), digits);
  Interval x = root_;
  for (int step = 0; step < 200; ++step) {
    const Interval e = enclosure_on(a, x);
    const std::string lo = subst::to_decimal(e.lo, digits), hi = subst::to_decimal(e.hi, digits);
    if (lo == hi) return lo;
    x = refine(minimal_, x, (x.hi - x.lo) / Rational(16));
  }
  const Interval e = enclosure_on(a, x);
  return subst::to_decimal((e.lo + e.hi) / Rational(2), digits);
}

}  // namespace subst
