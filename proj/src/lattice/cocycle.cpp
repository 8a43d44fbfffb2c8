#include "zhu/lattice/cocycle.hpp"

namespace zhu::lattice {

int Cocycle::operator()(const LatticeVec& a, const LatticeVec& b) const {
  // Only the parity of the exponent sum over the -1 entries matters.
  std::int64_t odd = 0;
  for (Eigen::Index i = 0; i < table.rows(); ++i)
    for (Eigen::Index j = 0; j < table.cols(); ++j)
      if (table(i, j) == -1) odd += a.coords(i) * b.coords(j);
  return odd % 2 == 0 ? 1 : -1;
}

Cocycle make_cocycle(const GramLattice& lattice) {
  const Eigen::Index d = lattice.rank();
  Cocycle eps{IntMatrix::Ones(d, d)};
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (lattice.gram()(i, j) % 2 != 0) eps.table(i, j) = -1;
  return eps;
}

}  // namespace zhu::lattice
