#include "zhu/exactmath/polynomial.hpp"

#include <algorithm>

namespace zhu {

Poly binom_poly(unsigned r) {
  Poly result(Rational(1));
  for (unsigned i = 0; i < r; ++i) result *= Poly({Rational(-static_cast<long>(i)), Rational(1)});
  return result * Rational(Integer(1), factorial(r));
}

Poly binom_poly_or_zero(long r) {
  if (r < 0) return {};
  return binom_poly(static_cast<unsigned>(r));
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Integer coefficient vector proportional to p (denominators cleared).
std::vector<Integer> integer_coefficients(const Poly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.denominator());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (den / c.denominator()));
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  Poly rest = p;

  // Roots at zero first, so the rational-root theorem sees a nonzero constant term.
  while (!rest.is_constant() && rest.coeff(0).is_zero()) {
    roots.emplace_back(0);
    rest = divmod(rest, Poly::x()).quotient;
  }
  if (rest.is_constant()) return roots;

  // Candidates come from the squarefree part; multiplicities from repeated division.
  const std::vector<Integer> ints = integer_coefficients(squarefree_part(rest));
  const std::vector<Integer> num_divs = positive_divisors(ints.front());
  const std::vector<Integer> den_divs = positive_divisors(ints.back());

  std::vector<Rational> candidates;
  for (const auto& a : num_divs) {
    for (const auto& b : den_divs) {
      candidates.emplace_back(a, b);
      candidates.emplace_back(-a, b);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& c : candidates) {
    const Poly linear({-c, Rational(1)});
    while (!rest.is_constant() && rest(c).is_zero()) {
      roots.push_back(c);
      rest = divmod(rest, linear).quotient;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace zhu
