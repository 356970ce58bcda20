#include "subst/polynomial.hpp"

namespace subst {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const BigInt& c : p.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const BigInt& c : p.coefficients()) g = gcd(g, c);
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading().sign() < 0) g = -g;
  std::vector<BigInt> v;
  for (const BigInt& c : p.coefficients()) v.push_back(c / g);
  return IntPolynomial(std::move(v));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt lcm = 1;
  for (const Rational& c : p.coefficients()) {
    const BigInt d = c.denominator();
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<BigInt> v;
  for (const Rational& c : p.coefficients()) v.push_back((c * Rational(lcm)).numerator());
  return primitive_part(IntPolynomial(std::move(v)));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw ContractViolation("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / b.leading();
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return (Rational(1) / x.leading()) * x;
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) return std::nullopt;
  std::vector<BigInt> v;
  for (const Rational& c : q.coefficients()) {
    if (!c.is_integer()) return std::nullopt;
    v.push_back(c.numerator());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p;
  const RatPolynomial rp = to_rational(p);
  const RatPolynomial g = gcd(rp, rp.derivative());
  return primitive_part(divmod(rp, g).first);
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt c = p.coeff(i);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace subst
