#pragma once

// Perron-Frobenius data of a primitive matrix, exact in Q(lambda_PF).

#include <string>
#include <vector>

#include "subst/number_field.hpp"
#include "subst/scalar.hpp"

namespace subst {

struct PFData {
  NumberField field;                            // Q(lambda_PF), generator = lambda_PF
  std::vector<NumberField::Element> left;       // smallest entry 1
  std::vector<NumberField::Element> right;      // entries sum to 1

  const IntPolynomial& minimal_polynomial() const { return field.minimal_polynomial(); }
  const Interval& lambda() const { return field.root(); }
  NumberField::Element lambda_element() const { return field.generator(); }
};

// Index of the largest real root of `p` among its isolating intervals.
Interval pf_root_interval(const IntPolynomial& char_poly);

// Irreducible factor of p vanishing at the root isolated by `iv`.
IntPolynomial minimal_polynomial_at(const IntPolynomial& p, const Interval& iv);

// Throws Refused if m is not primitive.
PFData pf_data(const IntMatrix& m);

std::string render_vector(const NumberField& field, const std::vector<NumberField::Element>& v, int digits);

}  // namespace subst
