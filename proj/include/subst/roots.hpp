#pragma once

// Exact root questions for integer polynomials: factorization over Z, real
// root isolation, and location of roots relative to the unit circle.

#include <vector>

#include "subst/polynomial.hpp"

namespace subst {

inline constexpr int kDefaultMaxFactorDegree = 8;

struct Factor {
  IntPolynomial poly;  // primitive, positive leading coefficient
  int multiplicity = 1;
};

struct Factorization {
  BigInt unit;  // signed content, so that p = unit * prod(factor^mult)
  std::vector<Factor> factors;
};

// Content and powers of x stripped, rational roots found directly, the rest
// by Kronecker's interpolation search over factor degrees 2, 3, ... so any
// factor found is irreducible. Throws UndecidedExact above max_degree.
Factorization factor_over_Z(const IntPolynomial& p, int max_degree = kDefaultMaxFactorDegree);
bool is_irreducible(const IntPolynomial& p, int max_degree = kDefaultMaxFactorDegree);
IntPolynomial expand(const Factorization& f);

struct Interval {
  Rational lo, hi;  // open on the left, closed on the right
};

// Sturm chain p, p', -rem(...), ...
std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p);
int sign_variations(const std::vector<RatPolynomial>& chain, const Rational& x);
// Distinct real roots in (a, b].
int count_real_roots(const RatPolynomial& p, const Rational& a, const Rational& b);
// All roots have modulus below this bound.
Rational cauchy_bound(const RatPolynomial& p);

// Disjoint isolating intervals for the distinct real roots, ascending.
std::vector<Interval> isolate_real_roots(const IntPolynomial& p);
// Shrinks an isolating interval of p to width at most `width`.
Interval refine(const IntPolynomial& p, Interval iv, const Rational& width);
// Shrinks an isolating interval until it no longer contains `point` in its
// interior; returns -1, 0, +1 for root below, equal to, above the point.
int compare_root(const IntPolynomial& p, Interval& iv, const Rational& point);

bool has_unit_circle_root(const IntPolynomial& p);
// Roots (with multiplicity) of modulus < 1. p must have no modulus-one root.
int count_roots_inside_unit_disc(const IntPolynomial& p);
// True iff every root other than the one isolated by `exclude` has modulus < 1.
bool roots_strictly_inside_unit_disc(const IntPolynomial& p, const Interval& exclude);

// Cauchy index over the real line of num/den, via a generalized Sturm chain.
int cauchy_index(const RatPolynomial& num, const RatPolynomial& den);

}  // namespace subst
