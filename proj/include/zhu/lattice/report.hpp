#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "zhu/exactmath/serialize.hpp"
#include "zhu/lattice/gram_lattice.hpp"
#include "zhu/lattice/lattice_module.hpp"

namespace zhu::lattice {

struct ModuleSummary {
  DualVec lambda;
  std::size_t dim = 0;
  Rational min_norm;
  friend bool operator==(const ModuleSummary&, const ModuleSummary&) = default;
};

struct LatticeReport {
  std::int64_t det = 0;
  std::vector<std::int64_t> invariant_factors;
  std::vector<ModuleSummary> modules;
  std::size_t algebra_dim = 0;
  bool semisimple = false;
  bool relations_verified = false;
  friend bool operator==(const LatticeReport&, const LatticeReport&) = default;
};

/// Full pipeline: discriminant group, modules, relations, algebra span and semisimplicity.
/// The relation report is returned through the optional out-parameter.
LatticeReport analyze_lattice(const GramLattice& lattice, RelationReport* relations = nullptr);

Json to_json(const LatticeReport& report);
LatticeReport lattice_report_from_json(const Json& j);

Json to_json(const DualVec& v);
DualVec dual_vec_from_json(const Json& j);

/// {"gram": [[...], ...]}. Malformed JSON throws std::invalid_argument, an invalid
/// matrix throws GramError.
GramLattice gram_from_json(const Json& j);
Json gram_to_json(const GramLattice& lattice);
GramLattice read_gram_file(const std::filesystem::path& path);

}  // namespace zhu::lattice
