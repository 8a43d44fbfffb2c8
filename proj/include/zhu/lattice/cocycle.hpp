#pragma once

#include "zhu/lattice/gram_lattice.hpp"

namespace zhu::lattice {

/// Bimultiplicative 2-cocycle with values +-1 determined by its values on basis pairs.
struct Cocycle {
  IntMatrix table;  ///< table(i, j) = eps(alpha_i, alpha_j)

  int operator()(const LatticeVec& a, const LatticeVec& b) const;
};

/// table(i, j) = (-1)^{G_ij} for i > j and +1 otherwise. Then
/// eps(a, b) eps(b, a) = (-1)^{<a, b>} because every G_ii is even.
Cocycle make_cocycle(const GramLattice& lattice);

}  // namespace zhu::lattice
