#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zhu/exactmath/operator_algebra.hpp"
#include "zhu/lattice/cocycle.hpp"
#include "zhu/lattice/gram_lattice.hpp"

namespace zhu::lattice {

/// g_{alpha,beta}(x) = C(x + <alpha,alpha>/2 - 1, -<alpha,beta> - 1), and 0 when <alpha,beta> >= 0.
/// The defining binomial sum is expanded as well; a disagreement throws std::logic_error.
Poly g_alpha_beta(const GramLattice& lattice, const LatticeVec& alpha, const LatticeVec& beta);

/// All beta in L with <beta,beta> <= 4 * (largest minimal coset norm), sorted.
/// Every E_beta outside this set acts as zero on all M^lambda.
std::vector<LatticeVec> generator_support(const GramLattice& lattice);

/// M^lambda on the basis u_alpha, alpha in Delta(lambda).
struct LatticeModule {
  DualVec lambda;
  std::vector<LatticeVec> delta;
  std::vector<QMatrix> h_action;            ///< one diagonal matrix per basis vector alpha_i
  std::map<LatticeVec, QMatrix> e_action;   ///< E_beta for beta in the generator support

  std::size_t dim() const { return delta.size(); }
  std::optional<std::size_t> index_of(const LatticeVec& alpha) const;
};

/// E_beta u_alpha = eps(beta, alpha) u_{alpha+beta} when alpha + beta is in Delta(lambda), else 0.
QMatrix e_operator(const Cocycle& eps, const LatticeModule& module, const LatticeVec& beta);

/// h acting by <lambda + alpha, h> on u_alpha; h is any vector of the rational span.
QMatrix cartan_operator(const GramLattice& lattice, const LatticeModule& module, const DualVec& h);

/// Throws NotInSError unless lambda is minimal in its coset.
LatticeModule build_module(const GramLattice& lattice, const DualVec& lambda);
LatticeModule build_module(const GramLattice& lattice, const DualVec& lambda, const Cocycle& eps,
                           std::span<const LatticeVec> support);

/// One module per coset of L in its dual, in coset order.
std::vector<LatticeModule> all_modules(const GramLattice& lattice);

struct Counterexample {
  LatticeVec alpha;
  LatticeVec beta;
  DualVec lambda;
  LatticeVec basis_vector;  ///< the u_gamma where the two sides first differ
};

struct RelationResult {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;  ///< at most a few per relation
};

struct RelationReport {
  std::vector<RelationResult> relations;
  bool all_pass() const;
};

/// Checks the defining relations of the algebra on the sum of all M^lambda:
///   identity                    E_0 = 1
///   cartan_commutative          h h' = h' h
///   cartan_grading              h E_a - E_a h = <h, a> E_a
///   weight_condition            (a - <a,a>/2) E_a = 0
///   positive_pairing_product    E_a E_b = 0 if <a,b> > 0
///   nonpositive_pairing_product E_a E_b = eps(a,b) E_{a+b} C(a + <a,a>/2, -<a,b>) if <a,b> <= 0
/// The binomial factor in the last relation acts first.
RelationReport verify_relations(const GramLattice& lattice);
RelationReport verify_relations(const GramLattice& lattice, std::span<const LatticeModule> modules);

/// Unital algebra generated by the images of all h_i and E_beta on the sum of all M^lambda.
StructureAlgebra algebra_span(const GramLattice& lattice);
StructureAlgebra algebra_span(const GramLattice& lattice, std::span<const LatticeModule> modules);

/// M^l1 and M^l2 are isomorphic iff l2 - l1 lies in L. Throws NotInSError unless both are in S.
bool module_equivalence(const GramLattice& lattice, const DualVec& l1, const DualVec& l2);

}  // namespace zhu::lattice
