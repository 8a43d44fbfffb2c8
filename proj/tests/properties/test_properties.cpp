#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "zhu/bridge/identities.hpp"
#include "zhu/exactmath/serialize.hpp"
#include "zhu/lattice/report.hpp"
#include "zhu/rbar/rbar.hpp"
#include "zhu/smith/smith_algebra.hpp"

using namespace zhu;
using namespace zhu::smith;

namespace {

constexpr int kCases = 200;

std::vector<SmithAlgebra> algebras() {
  std::vector<SmithAlgebra> out{SmithAlgebra(Poly({Rational(0), Rational(2)})), SmithAlgebra(rbar::g_k(2)),
                                SmithAlgebra(rbar::g_k(3))};
  std::mt19937 rng(123);
  for (int i = 0; i < 3; ++i) out.emplace_back(oracle::random_poly(rng, 4));
  return out;
}

NcElement random_element(std::mt19937& rng, std::size_t terms = 3) {
  std::uniform_int_distribution<unsigned> e(0, 2);
  NcElement x;
  for (std::size_t i = 0; i < terms; ++i) x.add_term({e(rng), e(rng), e(rng)}, oracle::random_rational(rng));
  return x;
}

std::vector<lattice::GramLattice> lattices() {
  std::vector<lattice::GramLattice> out;
  for (const auto& rows : std::vector<std::vector<std::vector<std::int64_t>>>{
           {{2}}, {{4}}, {{8}}, {{2, -1}, {-1, 2}}, {{2, 1}, {1, 4}}, {{4, -2}, {-2, 6}},
           {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {{2, 1, 1}, {1, 4, 1}, {1, 1, 6}}})
    out.push_back(lattice::validate_gram(rows));
  return out;
}

}  // namespace

TEST_CASE("rewriting is confluent") {
  const auto algs = algebras();
  std::mt19937 rng(1);
  for (int i = 0; i < kCases; ++i) {
    const auto& alg = algs[static_cast<std::size_t>(i) % algs.size()];
    const Word w = oracle::random_word(rng, 7);
    CHECK(normal_form(alg, w, RewriteStrategy::LeftmostFirst) == normal_form(alg, w, RewriteStrategy::RightmostFirst));
  }
}

TEST_CASE("multiplication is associative and agrees with rewriting") {
  const auto algs = algebras();
  std::mt19937 rng(2);
  for (int i = 0; i < kCases; ++i) {
    const auto& alg = algs[static_cast<std::size_t>(i) % algs.size()];
    const NcElement a = random_element(rng);
    const NcElement b = random_element(rng);
    const NcElement c = random_element(rng);
    CHECK(nc_mul(alg, nc_mul(alg, a, b), c) == nc_mul(alg, a, nc_mul(alg, b, c)));

    const Word u = oracle::random_word(rng, 4);
    const Word v = oracle::random_word(rng, 4);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(normal_form(alg, uv) == nc_mul(alg, normal_form(alg, u), normal_form(alg, v)));
  }
}

TEST_CASE("rewriting preserves the grading") {
  const auto algs = algebras();
  std::mt19937 rng(3);
  for (int i = 0; i < kCases; ++i) {
    const auto& alg = algs[static_cast<std::size_t>(i) % algs.size()];
    const Word w = oracle::random_word(rng, 8);
    const int expected = static_cast<int>(std::count(w.begin(), w.end(), Generator::A)) -
                         static_cast<int>(std::count(w.begin(), w.end(), Generator::B));
    const NcElement nf = normal_form(alg, w);
    if (nf.is_zero()) continue;
    CHECK(nf.homogeneous_degree() == expected);
  }
}

TEST_CASE("every rewrite step decreases the termination measure") {
  const auto algs = algebras();
  std::mt19937 rng(4);
  int steps = 0;
  for (int i = 0; i < kCases; ++i) {
    const auto& alg = algs[static_cast<std::size_t>(i) % algs.size()];
    const Word w = oracle::random_word(rng, 8);
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const bool offending = (w[p] == Generator::A && w[p + 1] != Generator::A) ||
                             (w[p] == Generator::H && w[p + 1] == Generator::B);
      if (!offending) continue;
      for (const auto& [next, c] : rewrite_at(alg, w, p)) CHECK(inversion_measure(next) < inversion_measure(w));
      ++steps;
    }
  }
  CHECK(steps > 0);
}

TEST_CASE("cocycle identities") {
  std::mt19937 rng(5);
  const auto lats = lattices();
  for (int i = 0; i < kCases; ++i) {
    const auto& l = lats[static_cast<std::size_t>(i) % lats.size()];
    const auto eps = lattice::make_cocycle(l);
    const auto a = oracle::random_lattice_vec(rng, l.rank());
    const auto b = oracle::random_lattice_vec(rng, l.rank());
    const int sign = l.pairing(a, b) % 2 == 0 ? 1 : -1;
    CHECK(eps(a, b) * eps(b, a) == sign);
    CHECK(std::abs(eps(a, b)) == 1);
  }
  for (int i = 0; i < kCases; ++i) {
    const auto& l = lats[static_cast<std::size_t>(i) % lats.size()];
    const auto eps = lattice::make_cocycle(l);
    const auto a = oracle::random_lattice_vec(rng, l.rank());
    const auto b = oracle::random_lattice_vec(rng, l.rank());
    const auto c = oracle::random_lattice_vec(rng, l.rank());
    CHECK(eps(a, b) * eps(a + b, c) == eps(b, c) * eps(a, b + c));
    CHECK(eps(a + b, c) == eps(a, c) * eps(b, c));
  }
}

TEST_CASE("E_beta matrices are signed partial permutations") {
  std::size_t seen = 0;
  for (const auto& l : lattices()) {
    for (const auto& m : lattice::all_modules(l)) {
      for (const auto& [beta, e] : m.e_action) {
        ++seen;
        for (Eigen::Index r = 0; r < e.rows(); ++r) {
          int row_nonzero = 0;
          for (Eigen::Index c = 0; c < e.cols(); ++c) {
            if (e(r, c).is_zero()) continue;
            ++row_nonzero;
            CHECK((e(r, c) == Rational(1) || e(r, c) == Rational(-1)));
          }
          CHECK(row_nonzero <= 1);
        }
        for (Eigen::Index c = 0; c < e.cols(); ++c) {
          int col_nonzero = 0;
          for (Eigen::Index r = 0; r < e.rows(); ++r) col_nonzero += e(r, c).is_zero() ? 0 : 1;
          CHECK(col_nonzero <= 1);
        }
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("JSON round trips") {
  std::mt19937 rng(6);
  for (int i = 0; i < kCases; ++i) {
    const NcElement e = random_element(rng, 4);
    CHECK(nc_from_json(Json::parse(to_json(e).dump())) == e);
    const Poly p = oracle::random_poly(rng, 6);
    CHECK(poly_from_json(Json::parse(to_json(p).dump())) == p);
  }
  for (const auto& l : lattices()) {
    const auto report = lattice::analyze_lattice(l);
    CHECK(lattice::lattice_report_from_json(Json::parse(lattice::to_json(report).dump())) == report);
    CHECK(lattice::gram_from_json(lattice::gram_to_json(l)).gram() == l.gram());
  }
  for (const auto& r : bridge::run_identity_suite("all"))
    CHECK(bridge::identity_report_from_json(Json::parse(bridge::to_json(r).dump())) == r);
  for (unsigned k = 1; k <= 3; ++k) {
    const auto report = rbar::rbar_report(k);
    CHECK(rbar::algebra_report_from_json(Json::parse(rbar::to_json(report).dump())) == report);
  }
}
