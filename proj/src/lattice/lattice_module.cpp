#include "zhu/lattice/lattice_module.hpp"

#include <algorithm>
#include <functional>

namespace zhu::lattice {

Poly g_alpha_beta(const GramLattice& lattice, const LatticeVec& alpha, const LatticeVec& beta) {
  const std::int64_t pairing = lattice.pairing(alpha, beta);
  if (pairing >= 0) return {};
  const long m = static_cast<long>(lattice.norm(alpha) / 2);
  const long n = -static_cast<long>(pairing);
  Poly sum;
  for (long r = 0; r <= m - 1; ++r) sum += binom_poly_or_zero(n - 1 - r) * Rational(binomial(static_cast<unsigned>(m - 1), static_cast<unsigned>(r)));
  const Poly closed = poly_shift(binom_poly(static_cast<unsigned>(n - 1)), Rational(m - 1));
  if (!(sum == closed)) throw std::logic_error("g_alpha_beta: binomial sum disagrees with closed form");
  return closed;
}

std::vector<LatticeVec> generator_support(const GramLattice& lattice) {
  Rational widest;
  for (const auto& coset : min_coset_reps(lattice)) widest = std::max(widest, coset.min_norm);
  std::vector<LatticeVec> out;
  for (const auto& v : short_vectors(lattice, DualVec::zero(lattice.rank()), widest * Rational(4))) {
    out.push_back(v.to_lattice());
  }
  return out;
}

std::optional<std::size_t> LatticeModule::index_of(const LatticeVec& alpha) const {
  const auto it = std::lower_bound(delta.begin(), delta.end(), alpha);
  if (it == delta.end() || !(*it == alpha)) return std::nullopt;
  return static_cast<std::size_t>(it - delta.begin());
}

QMatrix e_operator(const Cocycle& eps, const LatticeModule& module, const LatticeVec& beta) {
  const auto n = static_cast<Eigen::Index>(module.dim());
  QMatrix e = QMatrix::Zero(n, n);
  for (std::size_t col = 0; col < module.dim(); ++col) {
    const LatticeVec& source = module.delta[col];
    if (const auto row = module.index_of(source + beta)) {
      e(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) = Rational(eps(beta, source));
    }
  }
  return e;
}

QMatrix cartan_operator(const GramLattice& lattice, const LatticeModule& module, const DualVec& h) {
  const auto n = static_cast<Eigen::Index>(module.dim());
  QMatrix out = QMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i, i) = lattice.pairing(module.lambda + DualVec::from(module.delta[static_cast<std::size_t>(i)]), h);
  }
  return out;
}

LatticeModule build_module(const GramLattice& lattice, const DualVec& lambda, const Cocycle& eps,
                           std::span<const LatticeVec> support) {
  LatticeModule module{lambda, delta_set(lattice, lambda), {}, {}};
  for (Eigen::Index i = 0; i < lattice.rank(); ++i) {
    module.h_action.push_back(cartan_operator(lattice, module, DualVec::from(LatticeVec::basis(lattice.rank(), i))));
  }
  for (const auto& beta : support) module.e_action.emplace(beta, e_operator(eps, module, beta));
  return module;
}

LatticeModule build_module(const GramLattice& lattice, const DualVec& lambda) {
  const auto support = generator_support(lattice);
  return build_module(lattice, lambda, make_cocycle(lattice), support);
}

std::vector<LatticeModule> all_modules(const GramLattice& lattice) {
  const Cocycle eps = make_cocycle(lattice);
  const auto support = generator_support(lattice);
  std::vector<LatticeModule> out;
  for (const auto& coset : min_coset_reps(lattice)) out.push_back(build_module(lattice, coset.lambda, eps, support));
  return out;
}

bool RelationReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.pass; });
}

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class RelationChecker {
 public:
  explicit RelationChecker(std::string name) { result_.name = std::move(name); }

  void check(const LatticeModule& module, const LatticeVec& alpha, const LatticeVec& beta, const QMatrix& lhs,
             const QMatrix& rhs) {
    ++result_.checked;
    for (Eigen::Index col = 0; col < lhs.cols(); ++col) {
      if (exactly_equal(lhs.col(col), rhs.col(col))) continue;
      result_.pass = false;
      if (result_.counterexamples.size() < kMaxCounterexamples) {
        result_.counterexamples.push_back({alpha, beta, module.lambda, module.delta[static_cast<std::size_t>(col)]});
      }
      return;
    }
  }

  RelationResult take() { return std::move(result_); }

 private:
  RelationResult result_;
};

}  // namespace

RelationReport verify_relations(const GramLattice& lattice, std::span<const LatticeModule> modules) {
  const Cocycle eps = make_cocycle(lattice);
  const auto support = generator_support(lattice);
  const Eigen::Index d = lattice.rank();
  const LatticeVec origin = LatticeVec::zero(d);

  RelationChecker identity("identity");
  RelationChecker commutative("cartan_commutative");
  RelationChecker grading("cartan_grading");
  RelationChecker weight("weight_condition");
  RelationChecker positive("positive_pairing_product");
  RelationChecker nonpositive("nonpositive_pairing_product");

  for (const auto& module : modules) {
    const auto n = static_cast<Eigen::Index>(module.dim());
    const QMatrix one = QMatrix::Identity(n, n);
    identity.check(module, origin, origin, e_operator(eps, module, origin), one);

    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const QMatrix& hi = module.h_action[static_cast<std::size_t>(i)];
        const QMatrix& hj = module.h_action[static_cast<std::size_t>(j)];
        commutative.check(module, LatticeVec::basis(d, i), LatticeVec::basis(d, j), exact_product(hi, hj), exact_product(hj, hi));
      }
    }

    for (const auto& alpha : support) {
      const QMatrix e_alpha = e_operator(eps, module, alpha);
      for (Eigen::Index i = 0; i < d; ++i) {
        const QMatrix& h = module.h_action[static_cast<std::size_t>(i)];
        const LatticeVec basis = LatticeVec::basis(d, i);
        grading.check(module, alpha, basis, exact_product(h, e_alpha) - exact_product(e_alpha, h),
                      e_alpha * Rational(lattice.pairing(basis, alpha)));
      }
      const Rational half_norm(lattice.norm(alpha) / 2);
      const QMatrix h_alpha = cartan_operator(lattice, module, DualVec::from(alpha));
      weight.check(module, alpha, origin, exact_product(h_alpha - one * half_norm, e_alpha), QMatrix::Zero(n, n));

      for (const auto& beta : support) {
        const QMatrix product = exact_product(e_alpha, e_operator(eps, module, beta));
        const std::int64_t pairing = lattice.pairing(alpha, beta);
        if (pairing > 0) {
          positive.check(module, alpha, beta, product, QMatrix::Zero(n, n));
          continue;
        }
        const Poly factor = binom_poly(static_cast<unsigned>(-pairing));
        QMatrix cartan = QMatrix::Zero(n, n);
        for (Eigen::Index c = 0; c < n; ++c) cartan(c, c) = factor(h_alpha(c, c) + half_norm);
        const QMatrix rhs = exact_product(e_operator(eps, module, alpha + beta), cartan) * Rational(eps(alpha, beta));
        nonpositive.check(module, alpha, beta, product, rhs);
      }
    }
  }

  RelationReport report;
  for (auto* checker : {&identity, &commutative, &grading, &weight, &positive, &nonpositive}) {
    report.relations.push_back(checker->take());
  }
  return report;
}

RelationReport verify_relations(const GramLattice& lattice) {
  const auto modules = all_modules(lattice);
  return verify_relations(lattice, modules);
}

StructureAlgebra algebra_span(const GramLattice& lattice, std::span<const LatticeModule> modules) {
  std::vector<QMatrix> generators;
  std::vector<QMatrix> blocks(modules.size());
  const auto stack = [&](const std::function<QMatrix(const LatticeModule&)>& pick) {
    for (std::size_t i = 0; i < modules.size(); ++i) blocks[i] = pick(modules[i]);
    generators.push_back(block_diagonal(blocks));
  };
  for (Eigen::Index i = 0; i < lattice.rank(); ++i) {
    stack([i](const LatticeModule& m) { return m.h_action[static_cast<std::size_t>(i)]; });
  }
  if (!modules.empty()) {
    for (const auto& [beta, unused] : modules.front().e_action) {
      stack([&beta](const LatticeModule& m) { return m.e_action.at(beta); });
    }
  }
  return operator_span(generators);
}

StructureAlgebra algebra_span(const GramLattice& lattice) {
  const auto modules = all_modules(lattice);
  return algebra_span(lattice, modules);
}

bool module_equivalence(const GramLattice& lattice, const DualVec& l1, const DualVec& l2) {
  delta_set(lattice, l1);
  delta_set(lattice, l2);
  return (l2 - l1).is_integral();
}

}  // namespace zhu::lattice
