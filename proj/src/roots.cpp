#include "subst/roots.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>

#include "subst/error.hpp"

namespace subst {

namespace {

using i128 = __int128;

std::vector<std::uint64_t> positive_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

constexpr std::uint64_t kMaxDivisorTarget = std::uint64_t(1) << 40;

// q^n p(r/q) with exact integers; zero iff r/q is a root.
BigInt homogeneous_value(const IntPolynomial& p, const BigInt& r, const BigInt& q) {
  // Horner on the homogenized form: acc = acc * r + c_i * q^(n - i)
  BigInt acc = 0, qp = 1;
  std::vector<BigInt> qpowers(static_cast<std::size_t>(p.degree()) + 1);
  for (auto& x : qpowers) { x = qp; qp *= q; }
  for (int i = p.degree(); i >= 0; --i) acc = acc * r + p.coeff(i) * qpowers[static_cast<std::size_t>(p.degree() - i)];
  return acc;
}

std::optional<IntPolynomial> find_linear_factor(const IntPolynomial& p) {
  const BigInt a0 = abs(p.coeff(0)), an = abs(p.leading());
  if (!a0.fits_int64() || !an.fits_int64() || a0.to_int64() > static_cast<std::int64_t>(kMaxDivisorTarget) ||
      an.to_int64() > static_cast<std::int64_t>(kMaxDivisorTarget))
    throw UndecidedExact("coefficients too large for the rational root test");
  const auto num = positive_divisors(static_cast<std::uint64_t>(a0.to_int64()));
  const auto den = positive_divisors(static_cast<std::uint64_t>(an.to_int64()));
  for (std::uint64_t q : den)
    for (std::uint64_t r : num) {
      if (std::gcd(q, r) != 1) continue;
      for (int s : {1, -1}) {
        const BigInt rr = BigInt(static_cast<unsigned long long>(r)) * BigInt(s);
        const BigInt qq(static_cast<unsigned long long>(q));
        if (homogeneous_value(p, rr, qq).is_zero()) return IntPolynomial({-rr, qq});
      }
    }
  return std::nullopt;
}

struct EvalPoint {
  long long x;
  std::vector<std::uint64_t> divisors;
  bool negative;
};

// Kronecker: a degree-d factor is determined by its values at d + 1 points,
// each of which divides the value of p there.
std::optional<IntPolynomial> find_factor_of_degree(const IntPolynomial& p, int d) {
  std::vector<EvalPoint> candidates;
  for (long long radius = 0; radius <= 64 && static_cast<int>(candidates.size()) < 4 * (d + 1); ++radius) {
    for (long long x : {radius, -radius}) {
      if (radius == 0 && !candidates.empty()) continue;
      const BigInt v = p(BigInt(x));
      if (v.is_zero()) throw ContractViolation("Kronecker search expects no rational roots");
      const BigInt m = abs(v);
      if (!m.fits_int64() || m.to_int64() > static_cast<std::int64_t>(kMaxDivisorTarget)) continue;
      candidates.push_back({x, positive_divisors(static_cast<std::uint64_t>(m.to_int64())), v.sign() < 0});
    }
  }
  if (static_cast<int>(candidates.size()) < d + 1) throw UndecidedExact("no small evaluation points for factor search");
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const EvalPoint& a, const EvalPoint& b) { return a.divisors.size() < b.divisors.size(); });
  candidates.resize(static_cast<std::size_t>(d) + 1);

  // Integer Lagrange basis scaled by a common denominator.
  const std::size_t npts = candidates.size();
  std::vector<RatPolynomial> basis;
  for (std::size_t i = 0; i < npts; ++i) {
    RatPolynomial li = RatPolynomial::constant(Rational(1));
    for (std::size_t j = 0; j < npts; ++j) {
      if (i == j) continue;
      const Rational denom(static_cast<long long>(candidates[i].x - candidates[j].x));
      li = li * RatPolynomial({Rational(static_cast<long long>(-candidates[j].x)) / denom, Rational(1) / denom});
    }
    basis.push_back(li);
  }
  BigInt common = 1;
  for (const auto& b : basis)
    for (const Rational& c : b.coefficients()) {
      const BigInt den = c.denominator();
      common = common / gcd(common, den) * den;
    }
  if (!common.fits_int64()) throw UndecidedExact("interpolation denominator too large");
  const i128 D = common.to_int64();
  std::vector<std::vector<i128>> lint(npts, std::vector<i128>(static_cast<std::size_t>(d) + 1, 0));
  for (std::size_t i = 0; i < npts; ++i)
    for (int k = 0; k <= d; ++k) {
      const BigInt c = (basis[i].coeff(k) * Rational(common)).numerator();
      lint[i][static_cast<std::size_t>(k)] = c.to_int64();
    }

  const BigInt lead = abs(p.leading());
  std::vector<i128> acc(static_cast<std::size_t>(d) + 1, 0);
  std::optional<IntPolynomial> found;
  std::function<bool(std::size_t)> recurse = [&](std::size_t i) -> bool {
    if (i == npts) {
      if (acc[static_cast<std::size_t>(d)] == 0) return false;
      std::vector<BigInt> coeffs;
      for (i128 a : acc) {
        if (a % D != 0) return false;
        const i128 c = a / D;
        if (c > INT64_MAX || c < INT64_MIN) return false;
        coeffs.emplace_back(static_cast<long long>(c));
      }
      IntPolynomial g = primitive_part(IntPolynomial(std::move(coeffs)));
      if (g.degree() != d) return false;
      if (!(lead % abs(g.leading())).is_zero()) return false;
      if (exact_quotient(p, g)) {
        found = std::move(g);
        return true;
      }
      return false;
    }
    for (std::uint64_t div : candidates[i].divisors) {
      // g and -g are the same factor: fix the sign at the first point.
      for (int s : {1, -1}) {
        if (i == 0 && s < 0) continue;
        const i128 v = static_cast<i128>(div) * s;
        for (int k = 0; k <= d; ++k) acc[static_cast<std::size_t>(k)] += v * lint[i][static_cast<std::size_t>(k)];
        const bool hit = recurse(i + 1);
        for (int k = 0; k <= d; ++k) acc[static_cast<std::size_t>(k)] -= v * lint[i][static_cast<std::size_t>(k)];
        if (hit) return true;
      }
    }
    return false;
  };
  recurse(0);
  return found;
}

void add_factor(std::vector<Factor>& out, const IntPolynomial& f, int mult) {
  for (auto& existing : out)
    if (existing.poly == f) {
      existing.multiplicity += mult;
      return;
    }
  out.push_back({f, mult});
}

// Divides out every power of f from q; returns the multiplicity.
int divide_out(IntPolynomial& q, const IntPolynomial& f) {
  int mult = 0;
  while (q.degree() >= f.degree()) {
    auto quotient = exact_quotient(q, f);
    if (!quotient) break;
    q = std::move(*quotient);
    ++mult;
  }
  return mult;
}

}  // namespace

Factorization factor_over_Z(const IntPolynomial& p, int max_degree) {
  if (p.degree() < 1) throw ContractViolation("factorization needs degree at least 1");
  if (p.degree() > max_degree) throw UndecidedExact("degree " + std::to_string(p.degree()) + " exceeds the factorization cap");
  Factorization result;
  result.unit = content(p);
  if (p.leading().sign() < 0) result.unit = -result.unit;
  IntPolynomial q = primitive_part(p);

  int zeros = 0;
  while (q.coeff(0).is_zero()) {
    std::vector<BigInt> shifted(q.coefficients().begin() + 1, q.coefficients().end());
    q = IntPolynomial(std::move(shifted));
    ++zeros;
  }
  if (zeros > 0) add_factor(result.factors, IntPolynomial({BigInt(0), BigInt(1)}), zeros);

  while (q.degree() >= 1) {
    auto lin = find_linear_factor(q);
    if (!lin) break;
    const IntPolynomial f = primitive_part(*lin);
    add_factor(result.factors, f, divide_out(q, f));
  }
  for (int d = 2; 2 * d <= q.degree();) {
    auto f = find_factor_of_degree(q, d);
    if (!f) {
      ++d;
      continue;
    }
    add_factor(result.factors, *f, divide_out(q, *f));
  }
  if (q.degree() >= 1) add_factor(result.factors, q, 1);
  std::sort(result.factors.begin(), result.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return std::lexicographical_compare(a.poly.coefficients().begin(), a.poly.coefficients().end(),
                                        b.poly.coefficients().begin(), b.poly.coefficients().end());
  });
  return result;
}

bool is_irreducible(const IntPolynomial& p, int max_degree) {
  const auto f = factor_over_Z(p, max_degree);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

IntPolynomial expand(const Factorization& f) {
  IntPolynomial r = IntPolynomial::constant(f.unit);
  for (const auto& factor : f.factors)
    for (int i = 0; i < factor.multiplicity; ++i) r = r * factor.poly;
  return r;
}

std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
  std::vector<RatPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    RatPolynomial r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<RatPolynomial>& chain, const Rational& x) {
  int variations = 0, last = 0;
  for (const auto& f : chain) {
    const int s = f.evaluate(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

namespace {

int variations_at_infinity(const std::vector<RatPolynomial>& chain, bool positive) {
  int variations = 0, last = 0;
  for (const auto& f : chain) {
    int s = f.leading().sign();
    if (!positive && f.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int count_real_roots(const RatPolynomial& p, const Rational& a, const Rational& b) {
  if (p.degree() < 1) return 0;
  const auto chain = sturm_chain(p);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational cauchy_bound(const RatPolynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i) / p.leading()));
  return m + Rational(1);
}

std::vector<Interval> isolate_real_roots(const IntPolynomial& input) {
  std::vector<Interval> out;
  if (input.degree() < 1) return out;
  const RatPolynomial p = to_rational(squarefree_part(input));
  const auto chain = sturm_chain(p);
  const Rational bound = cauchy_bound(p);
  std::function<void(const Rational&, const Rational&, int, int)> split = [&](const Rational& lo, const Rational& hi,
                                                                              int vlo, int vhi) {
    const int count = vlo - vhi;
    if (count == 0) return;
    if (count == 1) {
      out.push_back({lo, hi});
      return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    const int vmid = sign_variations(chain, mid);
    split(lo, mid, vlo, vmid);
    split(mid, hi, vmid, vhi);
  };
  split(-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound));
  return out;
}

Interval refine(const IntPolynomial& input, Interval iv, const Rational& width) {
  const RatPolynomial p = to_rational(squarefree_part(input));
  const auto chain = sturm_chain(p);
  while (iv.hi - iv.lo > width) {
    const Rational mid = (iv.lo + iv.hi) / Rational(2);
    if (sign_variations(chain, iv.lo) - sign_variations(chain, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

int compare_root(const IntPolynomial& input, Interval& iv, const Rational& point) {
  if (point <= iv.lo) return 1;
  if (point > iv.hi) return -1;
  const RatPolynomial p = to_rational(squarefree_part(input));
  if (p.evaluate(point).is_zero()) {
    iv = {iv.lo, point};
    return 0;
  }
  if (point == iv.hi) return -1;
  if (count_real_roots(p, iv.lo, point) == 1) {
    iv.hi = point;
    return -1;
  }
  iv.lo = point;
  return 1;
}

bool has_unit_circle_root(const IntPolynomial& p) {
  if (p.is_zero()) throw ContractViolation("zero polynomial");
  const RatPolynomial rp = to_rational(p);
  const RatPolynomial g = gcd(rp, rp.reciprocal());
  if (g.degree() < 1) return false;
  if (g(Rational(1)).is_zero() || g(Rational(-1)).is_zero()) return true;
  // g is now palindromic of even degree 2m: g(x) = x^m H(x + 1/x), and a root
  // on the circle means a real root of H in (-2, 2).
  const int m = g.degree() / 2;
  RatPolynomial h = RatPolynomial::constant(g.coeff(m));
  RatPolynomial prev = RatPolynomial::constant(Rational(2));
  RatPolynomial cur = RatPolynomial({Rational(0), Rational(1)});
  const RatPolynomial y = cur;
  for (int k = 1; k <= m; ++k) {
    h = h + g.coeff(m + k) * cur;
    RatPolynomial next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return count_real_roots(h, Rational(-2), Rational(2)) > 0;
}

int cauchy_index(const RatPolynomial& num, const RatPolynomial& den) {
  if (den.is_zero()) throw ContractViolation("Cauchy index with zero denominator");
  std::vector<RatPolynomial> chain{den, divmod(num, den).second};
  if (chain.back().is_zero()) return 0;
  while (true) {
    RatPolynomial r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

int count_roots_inside_unit_disc(const IntPolynomial& p) {
  if (has_unit_circle_root(p)) throw ContractViolation("polynomial has a root of modulus one");
  const int n = p.degree();
  if (n < 1) return 0;
  // x = (1 + w) / (1 - w) sends the open disc to the open left half-plane.
  const RatPolynomial plus({Rational(1), Rational(1)}), minus({Rational(1), Rational(-1)});
  RatPolynomial q;
  for (int k = 0; k <= n; ++k) {
    RatPolynomial term = RatPolynomial::constant(Rational(p.coeff(k)));
    for (int i = 0; i < k; ++i) term = term * plus;
    for (int i = k; i < n; ++i) term = term * minus;
    q = q + term;
  }
  // q(iy) = A(y) + i B(y)
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0)), b(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int j = 0; j <= n; ++j) {
    const Rational c = q.coeff(j);
    const bool flip = (j / 2) % 2 == 1;
    (j % 2 == 0 ? a : b)[static_cast<std::size_t>(j)] = flip ? -c : c;
  }
  const RatPolynomial A(std::move(a)), B(std::move(b));
  // Winding along the imaginary axis: pi (n_left - n_right).
  const int difference = n % 2 == 0 ? -cauchy_index(B, A) : cauchy_index(A, B);
  return (n + difference) / 2;
}

bool roots_strictly_inside_unit_disc(const IntPolynomial& p, const Interval& exclude) {
  const int inside = count_roots_inside_unit_disc(p);
  Interval iv = exclude;
  const bool excluded_inside = compare_root(p, iv, Rational(-1)) > 0 && compare_root(p, iv, Rational(1)) < 0;
  return inside - (excluded_inside ? 1 : 0) == p.degree() - 1;
}

}  // namespace subst
