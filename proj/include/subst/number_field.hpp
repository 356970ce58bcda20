#pragma once

// Arithmetic in Q(lambda) for a real algebraic lambda given by an irreducible
// polynomial and an isolating interval. Elements are rational polynomials of
// degree below the field degree.

#include <string>

#include "subst/polynomial.hpp"
#include "subst/roots.hpp"

namespace subst {

class NumberField {
 public:
  using Element = RatPolynomial;

  // minimal must be irreducible with exactly one root in `root`.
  NumberField(IntPolynomial minimal, Interval root);

  const IntPolynomial& minimal_polynomial() const { return minimal_; }
  const Interval& root() const { return root_; }
  int degree() const { return minimal_.degree(); }

  Element reduce(const RatPolynomial& p) const { return divmod(p, modulus_).second; }
  Element generator() const { return reduce(RatPolynomial({Rational(0), Rational(1)})); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
  Element inverse(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inverse(b)); }

  // Exact sign of the real number an element denotes.
  int sign(const Element& a) const;
  int compare(const Element& a, const Element& b) const { return sign(a - b); }
  // Rational enclosure of the value, of width at most `width`.
  Interval enclose(const Element& a, const Rational& width) const;
  std::string to_decimal(const Element& a, int digits) const;

 private:
  Interval enclosure_on(const Element& a, const Interval& x) const;

  IntPolynomial minimal_;
  RatPolynomial modulus_;
  Interval root_;
};

}  // namespace subst
