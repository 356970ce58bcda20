#include "subst/scalar.hpp"

#include <string>

namespace subst {

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 1) digits = 1;
  if (value.is_zero()) return "0";
  const bool negative = value.sign() < 0;
  const Rational x = abs(value);
  const BigInt num = x.numerator();
  const BigInt den = x.denominator();

  // Decimal exponent e with 10^e <= x < 10^(e+1).
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  auto pow10 = [](int k) {
    BigInt p = 1;
    for (int i = 0; i < k; ++i) p *= 10;
    return p;
  };
  auto geq_pow10 = [&](int k) {
    return k >= 0 ? num >= den * pow10(k) : num * pow10(-k) >= den;
  };
  while (!geq_pow10(e)) --e;
  while (geq_pow10(e + 1)) ++e;

  // Scaled integer with `digits` significant digits, rounded half up.
  const int shift = digits - 1 - e;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (shift >= 0) scaled_num *= pow10(shift);
  else scaled_den *= pow10(-shift);
  BigInt q = (scaled_num * 2 + scaled_den) / (scaled_den * 2);
  int exponent_shift = shift;
  if (q >= pow10(digits)) {  // rounding carried into a new digit
    q = q / 10;
    --exponent_shift;
  }

  std::string digits_str = q.str();
  std::string out;
  if (exponent_shift <= 0) {
    out = digits_str;
    out.append(static_cast<std::size_t>(-exponent_shift), '0');
  } else if (static_cast<int>(digits_str.size()) > exponent_shift) {
    const auto split = digits_str.size() - static_cast<std::size_t>(exponent_shift);
    out = digits_str.substr(0, split) + "." + digits_str.substr(split);
  } else {
    out = "0." + std::string(static_cast<std::size_t>(exponent_shift) - digits_str.size(), '0') + digits_str;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

}  // namespace subst
