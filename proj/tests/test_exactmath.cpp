#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zhu/exactmath/multipoly.hpp"
#include "zhu/exactmath/operator_algebra.hpp"
#include "zhu/exactmath/serialize.hpp"
#include "zhu/rbar/rbar.hpp"
#include "zhu/smith/smith_algebra.hpp"

using namespace zhu;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(3, -6).denominator() == 2);
  CHECK(q(3, -6).numerator() == -1);
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(-7, 2).floor() == -4);
  CHECK(q(-7, 2).ceil() == -3);
  CHECK(Rational::parse(" -12/8 ") == q(-3, 2));
  CHECK(Rational::parse("5") == q(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("rational round trip (a/b + c/d) - c/d") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = oracle::random_rational(rng, 50, 17);
    const Rational c = oracle::random_rational(rng, 50, 17);
    CHECK((a + c) - c == a);
  }
}

TEST_CASE("binom_poly") {
  CHECK(binom_poly(0) == Poly(Rational(1)));
  CHECK(binom_poly(2) == Poly({q(0), q(-1, 2), q(1, 2)}));
  CHECK(binom_poly(3)(q(5)) == q(10));
  for (unsigned n = 0; n <= 12; ++n) {
    const auto row = oracle::pascal_row(n);
    for (unsigned r = 0; r <= n; ++r) CHECK(binom_poly(r)(Rational(n)) == Rational(row[r]));
  }
  CHECK(binom_poly_or_zero(-1).is_zero());
}

TEST_CASE("poly_shift") {
  CHECK(poly_shift(Poly({q(0), q(0), q(1)}), q(1)) == Poly({q(1), q(2), q(1)}));
  const Poly p({q(3), q(-1, 2), q(0), q(7, 3)});
  CHECK(poly_shift(poly_shift(p, q(5, 2)), q(-5, 2)) == p);

  // Summing shifts of g = x reproduces h_r by direct summation.
  const smith::SmithAlgebra alg(Poly::x());
  for (unsigned r = 0; r <= 6; ++r) {
    Poly sum;
    for (unsigned j = 0; j <= r; ++j) sum += poly_shift(Poly::x(), Rational(-static_cast<long>(j)));
    CHECK(sum == smith::h_sum(alg, r));
  }
}

TEST_CASE("schur_poly small cases") {
  const MultiPoly x1 = MultiPoly::variable(1);
  const MultiPoly x2 = MultiPoly::variable(2);
  const MultiPoly x3 = MultiPoly::variable(3);
  CHECK(schur_poly(0) == MultiPoly(q(1)));
  CHECK(schur_poly(1) == x1);
  CHECK(schur_poly(2) == x1 * x1 * q(1, 2) + x2 * q(1, 2));
  CHECK(schur_poly(3) == x1 * x1 * x1 * q(1, 6) + x1 * x2 * q(1, 2) + x3 * q(1, 3));
}

TEST_CASE("schur_specialize_alt equals binom_poly") {
  CHECK(schur_specialize_alt(1) == Poly::x());
  CHECK(schur_specialize_alt(2) == binom_poly(2));
  for (unsigned r = 0; r <= 12; ++r) CHECK(schur_specialize_alt(r) == binom_poly(r));
}

TEST_CASE("schur_poly matches the truncated exponential series") {
  std::mt19937 rng(11);
  for (unsigned r = 0; r <= 12; ++r) {
    for (int trial = 0; trial < 3; ++trial) {
      const Rational t = oracle::random_rational(rng, 4, 3);
      std::vector<Rational> xs;
      for (unsigned n = 1; n <= r; ++n) xs.push_back(pow(t, n) * Rational(n));
      CHECK(schur_poly(r).evaluate(xs) == oracle::exp_series_coefficient<Rational>(r, xs));
    }
    // The alternating specialization through the series, with polynomial coefficients.
    std::vector<Poly> alt;
    for (unsigned n = 1; n <= r; ++n) alt.push_back(Poly::x() * Rational(n % 2 == 1 ? 1 : -1));
    CHECK(oracle::exp_series_coefficient<Poly>(r, alt) == binom_poly(r));
  }
}

TEST_CASE("poly_gcd") {
  const Poly x2m1({q(-1), q(0), q(1)});
  CHECK(poly_gcd(x2m1, Poly({q(-1), q(1)})) == Poly({q(-1), q(1)}));
  const Poly p({q(2), q(4), q(6)});
  CHECK(poly_gcd(p, Poly()) == monic(p));
  CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), std::domain_error);

  const smith::SmithAlgebra g2(rbar::g_k(2));
  CHECK(poly_gcd(smith::h_sum(g2, 1), smith::h_sum(g2, 2)).degree() == 0);

  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Poly common = oracle::random_poly(rng, 2);
    const Poly a = oracle::random_poly(rng, 3) * common;
    const Poly b = oracle::random_poly(rng, 3) * common;
    if (a.is_zero() && b.is_zero()) continue;
    const Poly d = poly_gcd(a, b);
    CHECK(divmod(a, d).remainder.is_zero());
    CHECK(divmod(b, d).remainder.is_zero());
    CHECK(d.degree() >= common.degree());
  }
}

TEST_CASE("is_squarefree") {
  CHECK(is_squarefree(Poly({q(-1), q(0), q(1)})));
  CHECK_FALSE(is_squarefree(Poly({q(1), q(-2), q(1)})));
  CHECK_THROWS_AS(is_squarefree(Poly()), std::domain_error);
  const smith::SmithAlgebra g2(rbar::g_k(2));
  for (unsigned r = 0; r <= 40; ++r) CHECK(is_squarefree(smith::h_sum(g2, r)));
}

TEST_CASE("rational_roots") {
  CHECK(rational_roots(rbar::g_k(2)) == std::vector<Rational>{q(-1, 4), q(0), q(1, 4)});
  CHECK(rational_roots(Poly({q(1), q(0), q(1)})).empty());
  CHECK(rational_roots(Poly({q(1), q(-2), q(1)})) == std::vector<Rational>{q(1), q(1)});
  CHECK_THROWS_AS(rational_roots(Poly()), std::domain_error);
  const smith::SmithAlgebra sl2(Poly({q(0), q(2)}));
  for (unsigned j = 1; j <= 10; ++j) {
    CHECK(rational_roots(smith::h_sum(sl2, j - 1)) == std::vector<Rational>{q(j - 1, 2)});
  }
}

TEST_CASE("exact matrix helpers") {
  QMatrix m(2, 2);
  m << q(1), q(2), q(3), q(4);
  CHECK(exact_determinant(m) == q(-2));
  CHECK(exactly_equal(exact_product(m, exact_inverse(m)), QMatrix::Identity(2, 2)));
  CHECK(exactly_equal(exact_product(m, m), QMatrix(m * m)));
  QMatrix s(2, 2);
  s << q(1), q(2), q(2), q(4);
  CHECK(exact_rank(s) == 1);
  CHECK_THROWS_AS(exact_inverse(s), std::domain_error);
}

TEST_CASE("structure algebras and the trace form") {
  // Dual numbers: basis {1, n}, n^2 = 0.
  QMatrix l1 = QMatrix::Identity(2, 2);
  QMatrix ln = QMatrix::Zero(2, 2);
  ln(1, 0) = q(1);
  const auto dual = from_structure_constants({l1, ln});
  CHECK(is_associative(dual));
  CHECK_FALSE(is_semisimple(dual));

  // Q x Q with orthogonal idempotents.
  QMatrix e1 = QMatrix::Zero(2, 2);
  e1(0, 0) = q(1);
  QMatrix e2 = QMatrix::Zero(2, 2);
  e2(1, 1) = q(1);
  CHECK(is_semisimple(from_structure_constants({e1, e2})));

  // Wrong shape is rejected.
  CHECK_THROWS_AS(is_semisimple(from_structure_constants({QMatrix::Identity(3, 3)})), std::invalid_argument);

  // Full 2x2 matrix algebra from two matrix units.
  QMatrix up = QMatrix::Zero(2, 2);
  up(0, 1) = q(1);
  QMatrix down = QMatrix::Zero(2, 2);
  down(1, 0) = q(1);
  const std::vector<QMatrix> gens{up, down};
  const auto m2 = operator_span(gens);
  CHECK(m2.dimension() == 4);
  CHECK(is_associative(m2));
  CHECK(is_semisimple(m2));
}

TEST_CASE("JSON for rationals and polynomials") {
  CHECK(to_json(rbar::g_k(2)) == Json::parse(R"(["0","-2/3","0","32/3"])"));
  CHECK(parse_poly(R"(["0","-2/3","0","32/3"])") == rbar::g_k(2));
  CHECK(parse_poly("[0, 2]") == Poly({q(0), q(2)}));
  CHECK(rational_from_json(Json("7/21")) == q(1, 3));
  CHECK_THROWS_AS(parse_poly("[1,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("{\"a\":1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("[\"1/x\"]"), std::invalid_argument);
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Poly p = oracle::random_poly(rng, 6);
    CHECK(poly_from_json(Json::parse(to_json(p).dump())) == p);
  }
}
