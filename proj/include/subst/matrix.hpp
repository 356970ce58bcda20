#pragma once

// Substitution matrices and the integer-matrix invariants built on them.

#include "subst/polynomial.hpp"
#include "subst/scalar.hpp"
#include "subst/word.hpp"

namespace subst {

// Entry (i, j) counts letter i in phi(j).
IntMatrix substitution_matrix(const Substitution& phi);

struct Primitivity {
  bool primitive = false;
  int power = 0;  // smallest p with M^p > 0 when primitive
};

// Powers of the zero pattern until all entries are positive or the zero
// count repeats; (n-1)^2 + 1 bounds the search because the repeat rule alone
// does not terminate on every imprimitive pattern.
Primitivity is_primitive(const IntMatrix& m);
inline Primitivity is_primitive(const Substitution& phi) { return is_primitive(substitution_matrix(phi)); }

// det(x I - M), Faddeev-LeVerrier.
IntPolynomial char_poly(const IntMatrix& m);

Eigen::Index eventual_rank(const IntMatrix& m);

}  // namespace subst
