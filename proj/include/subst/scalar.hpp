#pragma once

// Exact scalar types used throughout: arbitrary precision integers and
// rationals with plain (non expression-template) operators so they can be
// used as Eigen scalars.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace subst {

namespace mp = boost::multiprecision;

class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : v_(v) {}
  BigInt(long v) : v_(v) {}
  BigInt(long long v) : v_(v) {}
  BigInt(unsigned long v) : v_(v) {}
  BigInt(unsigned long long v) : v_(v) {}
  explicit BigInt(mp::cpp_int v) : v_(std::move(v)) {}
  explicit BigInt(const std::string& decimal) : v_(decimal) {}

  const mp::cpp_int& raw() const { return v_; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mp::cpp_int(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mp::cpp_int(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mp::cpp_int(a.v_ * b.v_)); }
  // Truncating division, as for built-in integers.
  friend BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt(mp::cpp_int(a.v_ / b.v_)); }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt(mp::cpp_int(a.v_ % b.v_)); }
  BigInt operator-() const { return BigInt(mp::cpp_int(-v_)); }

  BigInt& operator+=(const BigInt& b) { v_ += b.v_; return *this; }
  BigInt& operator-=(const BigInt& b) { v_ -= b.v_; return *this; }
  BigInt& operator*=(const BigInt& b) { v_ *= b.v_; return *this; }
  BigInt& operator/=(const BigInt& b) { v_ /= b.v_; return *this; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return a.v_.compare(b.v_) <=> 0;
  }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool fits_int64() const {
    return v_ >= std::numeric_limits<std::int64_t>::min() && v_ <= std::numeric_limits<std::int64_t>::max();
  }
  std::int64_t to_int64() const { return v_.convert_to<std::int64_t>(); }
  double to_double() const { return v_.convert_to<double>(); }
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& b) { return os << b.v_; }

 private:
  mp::cpp_int v_;
};

inline BigInt abs(const BigInt& a) { return a.sign() < 0 ? -a : a; }
inline BigInt gcd(const BigInt& a, const BigInt& b) { return BigInt(mp::cpp_int(mp::gcd(a.raw(), b.raw()))); }

// Floor division and the matching non-negative remainder for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b).sign() != 0 && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(v) {}
  Rational(const BigInt& v) : v_(v.raw()) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num.raw(), den.raw()) {}
  explicit Rational(mp::cpp_rational v) : v_(std::move(v)) {}

  BigInt numerator() const { return BigInt(mp::cpp_int(mp::numerator(v_))); }
  BigInt denominator() const { return BigInt(mp::cpp_int(mp::denominator(v_))); }
  bool is_integer() const { return mp::denominator(v_) == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mp::cpp_rational(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mp::cpp_rational(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mp::cpp_rational(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(mp::cpp_rational(a.v_ / b.v_)); }
  Rational operator-() const { return Rational(mp::cpp_rational(-v_)); }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) { v_ /= b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.v_.compare(b.v_) <=> 0;
  }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  double to_double() const { return v_.convert_to<double>(); }
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

 private:
  mp::cpp_rational v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

// Decimal rendering with `digits` significant digits (round half away from zero).
std::string to_decimal(const Rational& value, int digits);

}  // namespace subst

namespace Eigen {

template <>
struct NumTraits<subst::BigInt> : GenericNumTraits<subst::BigInt> {
  using Real = subst::BigInt;
  using NonInteger = subst::Rational;
  using Nested = subst::BigInt;
  using Literal = subst::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
};

template <>
struct NumTraits<subst::Rational> : GenericNumTraits<subst::Rational> {
  using Real = subst::Rational;
  using NonInteger = subst::Rational;
  using Nested = subst::Rational;
  using Literal = subst::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 32
  };
};

}  // namespace Eigen

namespace subst {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

}  // namespace subst
