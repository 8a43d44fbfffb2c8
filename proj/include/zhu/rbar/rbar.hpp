#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "zhu/exactmath/operator_algebra.hpp"
#include "zhu/exactmath/serialize.hpp"
#include "zhu/smith/simple_modules.hpp"

namespace zhu::rbar {

/// g_k(x) = 2k/(2k-1)! * x (4k^2x^2 - 1)(4k^2x^2 - 4) ... (4k^2x^2 - (k-1)^2).
Poly g_k(unsigned k);

/// Raised when a constructed irreducible fails its expected shape. Signals a bug.
class RbarVerificationError : public std::logic_error {
 public:
  RbarVerificationError(int n, const std::string& what) : std::logic_error(what), n_(n) {}
  /// The offending weight numerator: the module is L(n/2k).
  int n() const { return n_; }

 private:
  int n_;
};

struct RbarSpec {
  unsigned k = 0;
  Poly g;
  /// L(n/2k) for n = -(k-1), ..., k, in that order.
  std::vector<smith::SimpleModuleSpec> irreducibles;
};

/// All irreducible modules of the quotient of R(g_k) by the ideal generated by
/// (1 - 2H)A, each verified for dimension and for the ideal relation.
RbarSpec rbar_irreducibles(unsigned k);

/// True iff (1 - 2H)A acts as zero on the module.
bool ideal_relation_holds(const smith::SimpleModuleSpec& module);

/// ideal_relation_holds on every irreducible of rbar_irreducibles(k).
bool check_ideal_relation(unsigned k);

/// Unital span of the block-diagonal images of A, B, H on the direct sum of all irreducibles.
StructureAlgebra rbar_algebra(unsigned k);

/// Dimension of rbar_algebra(k).
std::size_t rbar_dimension(unsigned k);

struct IrreducibleSummary {
  Rational weight;
  std::size_t dim = 0;
  friend bool operator==(const IrreducibleSummary&, const IrreducibleSummary&) = default;
};

struct AlgebraReport {
  unsigned k = 0;
  std::vector<IrreducibleSummary> irreducibles;
  std::size_t algebra_dim = 0;
  bool semisimple = false;
  friend bool operator==(const AlgebraReport&, const AlgebraReport&) = default;
};

AlgebraReport rbar_report(unsigned k);

Json to_json(const AlgebraReport& report);
AlgebraReport algebra_report_from_json(const Json& j);

}  // namespace zhu::rbar
