#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "zhu/exactmath/polynomial.hpp"
#include "zhu/exactmath/rational.hpp"

namespace zhu {

/// Sparse polynomial in x_1, x_2, ... over the rationals.
///
/// An exponent vector e stands for x_1^{e[0]} x_2^{e[1]} ...; trailing zero
/// exponents are trimmed, so every monomial has exactly one key. Zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// The variable x_index (1-based, as in x_1, x_2, ...).
  static MultiPoly variable(unsigned index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest variable index appearing (0 for constants).
  unsigned num_variables() const;

  void add_term(Exponents exponents, const Rational& c);

  /// values[i] is substituted for x_{i+1}; missing values count as zero.
  Rational evaluate(const std::vector<Rational>& values) const;

  /// Substitute a univariate polynomial for each variable: x_{i+1} -> images[i].
  Poly substitute(const std::vector<Poly>& images) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

 private:
  Terms terms_;
};

/// p_r(x_1, ..., x_r), the coefficient of y^r in exp(sum_n x_n y^n / n).
/// Built from r p_r = sum_{n=1}^{r} x_n p_{r-n}, p_0 = 1.
MultiPoly schur_poly(unsigned r);

/// schur_poly(r) with x_n replaced by (-1)^{n-1} x.
Poly schur_specialize_alt(unsigned r);

}  // namespace zhu
