#pragma once

#include <string>
#include <vector>

#include "zhu/exactmath/rational.hpp"

namespace zhu::bridge {

struct CrosscheckReport {
  unsigned k = 0;
  std::vector<std::size_t> rbar_dims;     ///< sorted
  std::vector<std::size_t> lattice_dims;  ///< sorted
  std::size_t rbar_algebra_dim = 0;
  std::size_t lattice_algebra_dim = 0;
  std::vector<std::string> mismatches;

  bool pass() const { return mismatches.empty(); }
};

/// Compares the quotient algebra pipeline for g_k with the lattice pipeline on
/// Gram [[2k]]: module counts, dimension multisets, algebra dimensions, and the
/// spectrum of H against that of h_alpha / 2k module by module.
CrosscheckReport rank_one_crosscheck(unsigned k);

}  // namespace zhu::bridge
