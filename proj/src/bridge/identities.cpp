#include "zhu/bridge/identities.hpp"

#include <numeric>
#include <stdexcept>

#include "zhu/exactmath/multipoly.hpp"

namespace zhu::bridge {

namespace {

IdentityReport make_report(std::string name, std::vector<long> parameters, Poly lhs, Poly rhs) {
  const bool pass = lhs == rhs;
  return {std::move(name), std::move(parameters), std::move(lhs), std::move(rhs), pass};
}

Rational choose(unsigned n, unsigned r) { return Rational(binomial(n, r)); }

}  // namespace

IdentityReport identity_vandermonde(unsigned n, unsigned m) {
  if (m < n) throw std::invalid_argument("outside stated range: need m >= n");
  Poly lhs;
  for (unsigned i = 0; i <= n; ++i) lhs += binom_poly(m - i) * choose(n, i);
  Poly rhs = poly_shift(binom_poly(m), Rational(n));
  return make_report("vandermonde", {static_cast<long>(n), static_cast<long>(m)}, std::move(lhs), std::move(rhs));
}

IdentityReport identity_ef(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  Poly lhs;
  for (unsigned i = 0; i < k; ++i) lhs += binom_poly(2 * k - 1 - i) * choose(k - 1, i);
  Poly rhs = poly_shift(binom_poly(2 * k - 1), Rational(k - 1));
  return make_report("ef", {static_cast<long>(k)}, std::move(lhs), std::move(rhs));
}

IdentityReport identity_pal(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const Poly top = binom_poly(2 * k);
  Poly lhs = poly_shift(top, Rational(k)) - compose_linear(top, Rational(-1), Rational(k));
  Poly rhs = poly_shift(binom_poly(2 * k - 1), Rational(k - 1));
  return make_report("pal", {static_cast<long>(k)}, std::move(lhs), std::move(rhs));
}

IdentityReport identity_schur(unsigned r) {
  return make_report("schur", {static_cast<long>(r)}, schur_specialize_alt(r), binom_poly(r));
}

std::pair<int, unsigned> weight_reduction(const std::vector<unsigned>& ns) {
  unsigned long total = 0;
  for (const unsigned n : ns) {
    if (n < 1) throw std::invalid_argument("weight_reduction needs positive modes");
    total += n;
  }
  const auto r = static_cast<unsigned>(ns.size());
  return {(total + r) % 2 == 0 ? 1 : -1, r};
}

Poly schur_vertex_coefficient(long alpha_norm, long beta_pairing, unsigned i) {
  if (alpha_norm < 0 || alpha_norm % 2 != 0) throw std::invalid_argument("alpha_norm must be a nonnegative even integer");
  const long n = -beta_pairing;
  if (static_cast<long>(i) - 1 >= n) return {};
  return schur_specialize_alt(static_cast<unsigned>(n - static_cast<long>(i)));
}

std::vector<IdentityReport> run_identity_suite(const std::string& suite, const SuiteBounds& bounds) {
  const bool all = suite == "all";
  if (!all && suite != "vandermonde" && suite != "ef" && suite != "pal" && suite != "schur") {
    throw std::invalid_argument("unknown identity suite: " + suite);
  }
  std::vector<IdentityReport> out;
  if (all || suite == "vandermonde") {
    for (unsigned m = 0; m <= bounds.max_nm; ++m)
      for (unsigned n = 0; n <= m; ++n) out.push_back(identity_vandermonde(n, m));
  }
  if (all || suite == "ef") {
    for (unsigned k = 1; k <= bounds.max_k; ++k) out.push_back(identity_ef(k));
  }
  if (all || suite == "pal") {
    for (unsigned k = 1; k <= bounds.max_k; ++k) out.push_back(identity_pal(k));
  }
  if (all || suite == "schur") {
    for (unsigned r = 0; r <= bounds.max_r; ++r) out.push_back(identity_schur(r));
  }
  return out;
}

Json to_json(const IdentityReport& report) {
  return {{"name", report.name},
          {"parameters", report.parameters},
          {"lhs", to_json(report.lhs)},
          {"rhs", to_json(report.rhs)},
          {"pass", report.pass}};
}

IdentityReport identity_report_from_json(const Json& j) {
  return {j.at("name").get<std::string>(), j.at("parameters").get<std::vector<long>>(), poly_from_json(j.at("lhs")),
          poly_from_json(j.at("rhs")), j.at("pass").get<bool>()};
}

}  // namespace zhu::bridge
