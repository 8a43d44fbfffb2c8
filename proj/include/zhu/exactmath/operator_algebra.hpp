#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zhu/exactmath/matrix.hpp"

namespace zhu {

/// A finite-dimensional associative algebra given by structure constants,
/// optionally together with a concrete realization by matrices.
///
/// left_mult[i] is the matrix of left multiplication by basis element i:
/// left_mult[i](k, j) is the coefficient of b_k in b_i * b_j.
struct StructureAlgebra {
  std::vector<QMatrix> basis;      ///< realization; empty for abstractly given algebras
  std::vector<QMatrix> left_mult;  ///< structure constants
  unsigned closure_rounds = 0;     ///< product rounds that enlarged the span

  std::size_t dimension() const { return left_mult.size(); }
};

/// Unital subalgebra of End(V) generated by the given square matrices.
///
/// Each round multiplies every pair of spanning elements where at least one
/// factor is new, so round r reaches all words of length up to 2^r. Stops at
/// the first round that adds nothing. Basis order is deterministic.
StructureAlgebra operator_span(std::span<const QMatrix> generators);

/// Wraps raw structure constants. Nothing is validated here; see check_closed().
StructureAlgebra from_structure_constants(std::vector<QMatrix> left_mult);

/// Throws std::invalid_argument unless the structure constants are shape
/// consistent and, when a realization is present, products of basis matrices
/// agree with the constants.
void check_closed(const StructureAlgebra& algebra);

/// L_{b_i b_j} == L_{b_i} L_{b_j} for all i, j.
bool is_associative(const StructureAlgebra& algebra);

/// T(a, b) = trace(L_a L_b) on the basis.
QMatrix trace_form(const StructureAlgebra& algebra);

/// Dickson's criterion in characteristic zero: semisimple iff the trace form
/// of the regular representation is nondegenerate.
bool is_semisimple(const StructureAlgebra& algebra);

/// Stack square matrices block-diagonally.
QMatrix block_diagonal(std::span<const QMatrix> blocks);

}  // namespace zhu
