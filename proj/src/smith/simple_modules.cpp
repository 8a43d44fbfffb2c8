#include "zhu/smith/simple_modules.hpp"

#include <algorithm>
#include <stdexcept>

namespace zhu::smith {

SimpleModuleSpec simple_module(const SmithAlgebra& alg, const Rational& lambda, std::size_t max_dim) {
  if (max_dim == 0) throw std::invalid_argument("max_dim must be positive");
  std::vector<Rational> h_at_lambda;  // h_{i}(lambda) for i = 0 .. j-1
  Rational running;
  std::size_t dim = 0;
  for (std::size_t j = 1; j <= max_dim; ++j) {
    running += alg.g()(lambda - Rational(j - 1));
    h_at_lambda.push_back(running);
    if (running.is_zero()) {
      dim = j;
      break;
    }
  }
  if (dim == 0) throw std::domain_error("no finite-dimensional simple with this highest weight within bound");

  const auto n = static_cast<Eigen::Index>(dim);
  SimpleModuleSpec out{lambda, dim, QMatrix::Zero(n, n), QMatrix::Zero(n, n), QMatrix::Zero(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.h(i, i) = lambda - Rational(i);
    if (i + 1 < n) out.b(i + 1, i) = Rational(1);
    if (i >= 1) out.a(i - 1, i) = h_at_lambda[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

bool satisfies_relations(const SmithAlgebra& alg, const SimpleModuleSpec& module) {
  const QMatrix& a = module.a;
  const QMatrix& b = module.b;
  const QMatrix& h = module.h;
  return exactly_equal(h * a - a * h, a) && exactly_equal(h * b - b * h, -b) &&
         exactly_equal(a * b - b * a, evaluate_at_matrix(alg.g(), h));
}

SimpleClassification classify_simples(const SmithAlgebra& alg, std::size_t j) {
  if (alg.g().is_zero()) throw std::domain_error("no finite-dimensional simples to classify");
  if (j == 0) throw std::invalid_argument("dimension must be positive");

  Poly candidate = squarefree_part(h_sum(alg, static_cast<unsigned>(j - 1)));
  for (std::size_t i = 1; i < j && !candidate.is_constant(); ++i) {
    const Poly common = poly_gcd(candidate, h_sum(alg, static_cast<unsigned>(i - 1)));
    if (!common.is_constant()) candidate = divmod(candidate, common).quotient;
  }

  SimpleClassification out;
  if (candidate.is_constant()) return out;
  out.rational_weights = rational_roots(candidate);
  out.nonrational_count = static_cast<std::size_t>(candidate.degree()) - out.rational_weights.size();
  return out;
}

SemisimplicityReport semisimplicity_criterion(const SmithAlgebra& alg, unsigned max_j) {
  if (alg.g().is_zero()) throw std::domain_error("semisimplicity criterion needs g != 0");
  std::vector<Poly> h;
  for (unsigned j = 0; j <= max_j; ++j) h.push_back(h_sum(alg, j));

  SemisimplicityReport report;
  report.all_pass = true;
  for (unsigned j = 0; j <= max_j; ++j) {
    const bool ok = is_squarefree(h[j]);
    report.squarefree.push_back({j, ok});
    report.all_pass &= ok;
  }
  for (unsigned j = 1; j <= max_j; ++j) {
    for (unsigned i = 0; i < j; ++i) {
      const int degree = poly_gcd(h[i], h[j]).degree();
      report.pairs.push_back({i, j, degree, degree == 0});
      report.all_pass &= degree == 0;
    }
  }
  return report;
}

}  // namespace zhu::smith
