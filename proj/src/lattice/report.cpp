#include "zhu/lattice/report.hpp"

#include <fstream>

namespace zhu::lattice {

LatticeReport analyze_lattice(const GramLattice& lattice, RelationReport* relations) {
  LatticeReport report;
  report.det = lattice.det();
  report.invariant_factors = discriminant_group(lattice).invariant_factors;

  const Cocycle eps = make_cocycle(lattice);
  const auto support = generator_support(lattice);
  std::vector<LatticeModule> modules;
  for (const auto& coset : min_coset_reps(lattice)) {
    modules.push_back(build_module(lattice, coset.lambda, eps, support));
    report.modules.push_back({coset.lambda, modules.back().dim(), coset.min_norm});
  }

  RelationReport checked = verify_relations(lattice, modules);
  report.relations_verified = checked.all_pass();
  if (relations != nullptr) *relations = std::move(checked);

  const StructureAlgebra algebra = algebra_span(lattice, modules);
  report.algebra_dim = algebra.dimension();
  report.semisimple = is_semisimple(algebra);
  return report;
}

Json to_json(const DualVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.coords.size(); ++i) out.push_back(to_json(v.coords(i)));
  return out;
}

DualVec dual_vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
  DualVec v{QVector(static_cast<Eigen::Index>(j.size()))};
  for (std::size_t i = 0; i < j.size(); ++i) v.coords(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json to_json(const LatticeReport& report) {
  Json modules = Json::array();
  for (const auto& m : report.modules) {
    modules.push_back({{"lambda", to_json(m.lambda)}, {"dim", m.dim}, {"min_norm", to_json(m.min_norm)}});
  }
  return {{"det", report.det},
          {"invariant_factors", report.invariant_factors},
          {"modules", modules},
          {"algebra_dim", report.algebra_dim},
          {"semisimple", report.semisimple},
          {"relations_verified", report.relations_verified}};
}

LatticeReport lattice_report_from_json(const Json& j) {
  LatticeReport report;
  report.det = j.at("det").get<std::int64_t>();
  report.invariant_factors = j.at("invariant_factors").get<std::vector<std::int64_t>>();
  for (const auto& m : j.at("modules")) {
    report.modules.push_back(
        {dual_vec_from_json(m.at("lambda")), m.at("dim").get<std::size_t>(), rational_from_json(m.at("min_norm"))});
  }
  report.algebra_dim = j.at("algebra_dim").get<std::size_t>();
  report.semisimple = j.at("semisimple").get<bool>();
  report.relations_verified = j.at("relations_verified").get<bool>();
  return report;
}

GramLattice gram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram") || !j["gram"].is_array()) {
    throw std::invalid_argument("expected an object with a \"gram\" array");
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j["gram"]) {
    if (!row.is_array()) throw std::invalid_argument("gram rows must be arrays of integers");
    std::vector<std::int64_t> values;
    for (const auto& entry : row) {
      if (!entry.is_number_integer()) throw std::invalid_argument("gram entries must be integers");
      values.push_back(entry.get<std::int64_t>());
    }
    rows.push_back(std::move(values));
  }
  return validate_gram(rows);
}

Json gram_to_json(const GramLattice& lattice) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < lattice.rank(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < lattice.rank(); ++j) row.push_back(lattice.gram()(i, j));
    rows.push_back(row);
  }
  return {{"gram", rows}};
}

GramLattice read_gram_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
  }
  return gram_from_json(j);
}

}  // namespace zhu::lattice
