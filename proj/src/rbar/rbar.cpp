#include "zhu/rbar/rbar.hpp"

#include <algorithm>

namespace zhu::rbar {

Poly g_k(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const Rational four_k_sq(4 * static_cast<long>(k) * static_cast<long>(k));
  Poly product = Poly::x() * Rational(Integer(2 * k), factorial(2 * k - 1));
  for (unsigned i = 1; i < k; ++i) product *= Poly({Rational(-static_cast<long>(i * i)), Rational(0), four_k_sq});
  return product;
}

bool ideal_relation_holds(const smith::SimpleModuleSpec& module) {
  const auto n = static_cast<Eigen::Index>(module.dim);
  const QMatrix op = (QMatrix::Identity(n, n) - module.h * Rational(2)) * module.a;
  return is_zero(op);
}

RbarSpec rbar_irreducibles(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  RbarSpec spec{k, g_k(k), {}};
  const smith::SmithAlgebra alg(spec.g);
  const int kk = static_cast<int>(k);
  for (int n = -(kk - 1); n <= kk; ++n) {
    const Rational weight(Integer(n), Integer(2 * kk));
    smith::SimpleModuleSpec module;
    try {
      module = smith::simple_module(alg, weight, 3);
    } catch (const std::domain_error&) {
      throw RbarVerificationError(n, "L(" + weight.to_string() + ") is not finite-dimensional within bound");
    }
    const std::size_t expected = n == kk ? 2 : 1;
    if (module.dim != expected) {
      throw RbarVerificationError(n, "L(" + weight.to_string() + ") has dimension " + std::to_string(module.dim) +
                                         ", expected " + std::to_string(expected));
    }
    if (!smith::satisfies_relations(alg, module)) {
      throw RbarVerificationError(n, "L(" + weight.to_string() + ") violates the defining relations");
    }
    if (!ideal_relation_holds(module)) {
      throw RbarVerificationError(n, "(1-2H)A does not vanish on L(" + weight.to_string() + ")");
    }
    spec.irreducibles.push_back(std::move(module));
  }
  return spec;
}

bool check_ideal_relation(unsigned k) {
  const RbarSpec spec = rbar_irreducibles(k);
  return std::all_of(spec.irreducibles.begin(), spec.irreducibles.end(), ideal_relation_holds);
}

StructureAlgebra rbar_algebra(unsigned k) {
  const RbarSpec spec = rbar_irreducibles(k);
  std::vector<QMatrix> a;
  std::vector<QMatrix> b;
  std::vector<QMatrix> h;
  for (const auto& m : spec.irreducibles) {
    a.push_back(m.a);
    b.push_back(m.b);
    h.push_back(m.h);
  }
  const std::vector<QMatrix> generators{block_diagonal(a), block_diagonal(b), block_diagonal(h)};
  return operator_span(generators);
}

std::size_t rbar_dimension(unsigned k) { return rbar_algebra(k).dimension(); }

AlgebraReport rbar_report(unsigned k) {
  const RbarSpec spec = rbar_irreducibles(k);
  AlgebraReport report;
  report.k = k;
  for (const auto& m : spec.irreducibles) report.irreducibles.push_back({m.lambda, m.dim});
  const StructureAlgebra algebra = rbar_algebra(k);
  report.algebra_dim = algebra.dimension();
  report.semisimple = is_semisimple(algebra);
  return report;
}

Json to_json(const AlgebraReport& report) {
  Json irreducibles = Json::array();
  for (const auto& irr : report.irreducibles) irreducibles.push_back({{"weight", to_json(irr.weight)}, {"dim", irr.dim}});
  return {{"k", report.k},
          {"irreducibles", irreducibles},
          {"algebra_dim", report.algebra_dim},
          {"semisimple", report.semisimple}};
}

AlgebraReport algebra_report_from_json(const Json& j) {
  AlgebraReport report;
  report.k = j.at("k").get<unsigned>();
  for (const auto& irr : j.at("irreducibles")) {
    report.irreducibles.push_back({rational_from_json(irr.at("weight")), irr.at("dim").get<std::size_t>()});
  }
  report.algebra_dim = j.at("algebra_dim").get<std::size_t>();
  report.semisimple = j.at("semisimple").get<bool>();
  return report;
}

}  // namespace zhu::rbar
