#pragma once

#include <cstddef>
#include <vector>

#include "zhu/exactmath/matrix.hpp"
#include "zhu/smith/smith_algebra.hpp"

namespace zhu::smith {

/// The finite-dimensional simple module L(lambda) on the basis v, Bv, ..., B^{dim-1}v.
struct SimpleModuleSpec {
  Rational lambda;
  std::size_t dim = 0;
  QMatrix a;
  QMatrix b;
  QMatrix h;
};

/// Builds L(lambda) for the minimal j <= max_dim with h_{j-1}(lambda) = 0.
/// Throws std::domain_error when no such j exists within the bound.
SimpleModuleSpec simple_module(const SmithAlgebra& alg, const Rational& lambda, std::size_t max_dim);

/// HA - AH = A, HB - BH = -B, AB - BA = g(H), checked as exact matrix identities.
bool satisfies_relations(const SmithAlgebra& alg, const SimpleModuleSpec& module);

struct SimpleClassification {
  std::vector<Rational> rational_weights;  ///< ascending
  std::size_t nonrational_count = 0;
};

/// Highest weights of the simple modules of dimension exactly j: roots of h_{j-1}
/// that are not roots of any h_{i-1}, i < j. Rational roots are listed; the rest
/// are only counted. Throws std::domain_error when g = 0, std::invalid_argument when j = 0.
SimpleClassification classify_simples(const SmithAlgebra& alg, std::size_t j);

struct SquarefreeVerdict {
  unsigned j = 0;
  bool squarefree = false;
};

struct CoprimeVerdict {
  unsigned i = 0;
  unsigned j = 0;
  int gcd_degree = 0;
  bool coprime = false;
};

struct SemisimplicityReport {
  std::vector<SquarefreeVerdict> squarefree;
  std::vector<CoprimeVerdict> pairs;
  bool all_pass = false;
};

/// Checks that h_0, ..., h_max_j are squarefree and pairwise coprime.
/// Throws std::domain_error when g = 0.
SemisimplicityReport semisimplicity_criterion(const SmithAlgebra& alg, unsigned max_j);

}  // namespace zhu::smith
