#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zhu/exactmath/rational.hpp"

namespace zhu {

/// Dense univariate polynomial over a field. Coefficient i multiplies x^i;
/// trailing zeros are always trimmed, so the zero polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Scalar& constant) : coeffs_{constant} { trim(); }  // NOLINT(google-explicit-constructor)
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }

  static Polynomial monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1, Scalar(0));
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  /// Horner evaluation; works for any ring T that accepts scalar coefficients.
  template <typename T = Scalar>
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      const Scalar& c = p.coeffs_[static_cast<std::size_t>(i)];
      if (c == Scalar(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using Poly = Polynomial<Rational>;

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = Scalar(static_cast<long>(i)) * p.coeffs()[i];
  return Polynomial<Scalar>(std::move(out));
}

/// q(x) = p(a*x + b), by Horner's scheme in the composed variable.
template <typename Scalar>
Polynomial<Scalar> compose_linear(const Polynomial<Scalar>& p, const Scalar& a, const Scalar& b) {
  const Polynomial<Scalar> inner({b, a});
  Polynomial<Scalar> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * inner + Polynomial<Scalar>(*it);
  return acc;
}

/// q(x) = p(x + c).
template <typename Scalar>
Polynomial<Scalar> poly_shift(const Polynomial<Scalar>& p, const Scalar& c) {
  return compose_linear(p, Scalar(1), c);
}

template <typename Scalar>
struct DivMod {
  Polynomial<Scalar> quotient;
  Polynomial<Scalar> remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
template <typename Scalar>
DivMod<Scalar> divmod(const Polynomial<Scalar>& num, const Polynomial<Scalar>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {Polynomial<Scalar>(), num};
  std::vector<Scalar> quot(static_cast<std::size_t>(num.degree() - dd + 1), Scalar(0));
  const Scalar lead = den.leading();
  for (int i = num.degree(); i >= dd; --i) {
    const Scalar c = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = c;
    if (c == Scalar(0)) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <typename Scalar>
Polynomial<Scalar> monic(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  return p * (Scalar(1) / p.leading());
}

/// Monic gcd. Throws std::domain_error("gcd undefined") when both inputs are zero.
template <typename Scalar>
Polynomial<Scalar> poly_gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  while (!b.is_zero()) {
    // Keep the remainder sequence monic to stop coefficient growth.
    Polynomial<Scalar> r = monic(divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// True iff gcd(p, p') is constant. Throws std::domain_error on p == 0.
template <typename Scalar>
bool is_squarefree(const Polynomial<Scalar>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree test of the zero polynomial");
  if (p.degree() < 1) return true;
  return poly_gcd(p, derivative(p)).degree() == 0;
}

/// p / gcd(p, p'), made monic: same roots, each with multiplicity one.
template <typename Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.degree() < 1) return Polynomial<Scalar>(Scalar(1));
  return monic(divmod(p, poly_gcd(p, derivative(p))).quotient);
}

/// The binomial polynomial C(x, r) = x(x-1)...(x-r+1)/r!; C(x, 0) = 1.
Poly binom_poly(unsigned r);

/// C(x, r) with the convention C(x, r) = 0 for negative r.
Poly binom_poly_or_zero(long r);

/// All rational roots, repeated by multiplicity, in ascending order.
/// Throws std::domain_error on the zero polynomial.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace zhu
