#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace zhu {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Operators return Rational rather
/// than GMP expression templates so the type behaves as a plain scalar inside
/// Eigen matrices.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error on a zero denominator.
  Rational(const Integer& numerator, const Integer& denominator);

  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "n", "-n", "p/q" (optionally signed, surrounding whitespace allowed).
  /// Throws std::invalid_argument on malformed input, std::domain_error on q == 0.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const { return Rational(::abs(value_)); }
  Rational inverse() const;

  /// "p/q", or "n" when the denominator is 1.
  std::string to_string() const { return value_.get_str(); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

 private:
  mpq_class value_{0};
};

/// x^e for a nonnegative exponent.
Rational pow(const Rational& x, unsigned exponent);

/// n! as an exact integer.
Integer factorial(unsigned n);

/// Integer binomial coefficient n choose r (0 when r > n).
Integer binomial(unsigned n, unsigned r);

// Free functions Eigen looks up by ADL for generic scalars.
inline Rational abs(const Rational& x) { return x.abs(); }
inline Rational abs2(const Rational& x) { return x * x; }
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return Rational(); }

}  // namespace zhu

template <>
struct std::hash<zhu::Rational> {
  std::size_t operator()(const zhu::Rational& x) const noexcept {
    return std::hash<std::string>{}(x.to_string());
  }
};

namespace Eigen {

template <>
struct NumTraits<zhu::Rational> : GenericNumTraits<zhu::Rational> {
  using Real = zhu::Rational;
  using NonInteger = zhu::Rational;
  using Nested = zhu::Rational;
  using Literal = zhu::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
