#include "subst/pf.hpp"

#include "subst/error.hpp"
#include "subst/matrix.hpp"

namespace subst {

Interval pf_root_interval(const IntPolynomial& char_poly) {
  const auto roots = isolate_real_roots(char_poly);
  if (roots.empty()) throw ContractViolation("polynomial has no real root");
  return roots.back();
}

IntPolynomial minimal_polynomial_at(const IntPolynomial& p, const Interval& iv) {
  const auto factorization = factor_over_Z(p);
  for (const auto& f : factorization.factors)
    if (count_real_roots(to_rational(f.poly), iv.lo, iv.hi) > 0) return f.poly;
  throw ContractViolation("no factor vanishes on the isolating interval");
}

namespace {

using Element = NumberField::Element;

// One non-zero kernel vector of a (square) matrix over the field.
std::vector<Element> kernel_vector(const NumberField& k, std::vector<std::vector<Element>> a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    const Element inv = k.inverse(a[r][c]);
    for (auto& x : a[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Element f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] = k.sub(a[i][j], k.mul(f, a[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::size_t free = 0;
  while (free < n && is_pivot[free]) ++free;
  if (free == n) throw ContractViolation("eigenvalue has trivial eigenspace");
  std::vector<Element> v(n);
  v[free] = RatPolynomial::constant(Rational(1));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
  return v;
}

std::vector<std::vector<Element>> shifted(const NumberField& k, const IntMatrix& m, bool transpose) {
  const auto n = static_cast<std::size_t>(m.rows());
  const Element lambda = k.generator();
  std::vector<std::vector<Element>> a(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt& entry = transpose ? m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))
                                      : m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      a[i][j] = RatPolynomial::constant(Rational(entry));
      if (i == j) a[i][j] = k.sub(a[i][j], lambda);
    }
  return a;
}

}  // namespace

PFData pf_data(const IntMatrix& m) {
  if (!is_primitive(m).primitive) throw Refused("matrix is not primitive");
  const IntPolynomial cp = char_poly(m);
  const Interval iv = pf_root_interval(cp);
  NumberField field(minimal_polynomial_at(cp, iv), iv);

  std::vector<Element> right = kernel_vector(field, shifted(field, m, false));
  Element total;
  for (const auto& x : right) total = field.add(total, x);
  const Element inv_total = field.inverse(total);
  for (auto& x : right) x = field.mul(x, inv_total);

  std::vector<Element> left = kernel_vector(field, shifted(field, m, true));
  if (field.sign(left[0]) < 0)
    for (auto& x : left) x = -x;
  std::size_t smallest = 0;
  for (std::size_t i = 1; i < left.size(); ++i)
    if (field.compare(left[i], left[smallest]) < 0) smallest = i;
  const Element inv_min = field.inverse(left[smallest]);
  for (auto& x : left) x = field.mul(x, inv_min);

  return {std::move(field), std::move(left), std::move(right)};
}

std::string render_vector(const NumberField& field, const std::vector<NumberField::Element>& v, int digits) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += field.to_decimal(v[i], digits);
  }
  return s + ")";
}

}  // namespace subst
