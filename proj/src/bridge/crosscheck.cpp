#include "zhu/bridge/crosscheck.hpp"

#include <algorithm>
#include <sstream>

#include "zhu/lattice/lattice_module.hpp"
#include "zhu/rbar/rbar.hpp"

namespace zhu::bridge {

namespace {

std::vector<Rational> sorted_diagonal(const QMatrix& m) {
  std::vector<Rational> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(m(i, i));
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const std::vector<Rational>& spectrum) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < spectrum.size(); ++i) os << (i ? ", " : "") << spectrum[i];
  os << "}";
  return os.str();
}

}  // namespace

CrosscheckReport rank_one_crosscheck(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  CrosscheckReport report;
  report.k = k;

  const rbar::RbarSpec spec = rbar::rbar_irreducibles(k);
  const lattice::GramLattice lat = lattice::validate_gram(std::vector<std::vector<std::int64_t>>{{2 * static_cast<std::int64_t>(k)}});
  const auto modules = lattice::all_modules(lat);

  for (const auto& m : spec.irreducibles) report.rbar_dims.push_back(m.dim);
  for (const auto& m : modules) report.lattice_dims.push_back(m.dim());
  std::sort(report.rbar_dims.begin(), report.rbar_dims.end());
  std::sort(report.lattice_dims.begin(), report.lattice_dims.end());

  if (spec.irreducibles.size() != modules.size()) {
    report.mismatches.push_back("irreducible counts differ: " + std::to_string(spec.irreducibles.size()) + " vs " +
                                std::to_string(modules.size()));
  }
  if (report.rbar_dims != report.lattice_dims) report.mismatches.push_back("dimension multisets differ");

  report.rbar_algebra_dim = rbar::rbar_dimension(k);
  report.lattice_algebra_dim = lattice::algebra_span(lat, modules).dimension();
  if (report.rbar_algebra_dim != report.lattice_algebra_dim) {
    report.mismatches.push_back("algebra dimensions differ: " + std::to_string(report.rbar_algebra_dim) + " vs " +
                                std::to_string(report.lattice_algebra_dim));
  }

  // H corresponds to h_alpha / 2k; each spectrum must be matched by a distinct lattice module.
  std::vector<std::vector<Rational>> lattice_spectra;
  const Rational scale(Integer(1), Integer(2 * static_cast<long>(k)));
  for (const auto& m : modules) {
    lattice_spectra.push_back(sorted_diagonal(m.h_action.front() * scale));
  }
  for (const auto& irr : spec.irreducibles) {
    const auto spectrum = sorted_diagonal(irr.h);
    const auto it = std::find(lattice_spectra.begin(), lattice_spectra.end(), spectrum);
    if (it == lattice_spectra.end()) {
      report.mismatches.push_back("no lattice module with H-spectrum " + describe(spectrum));
    } else {
      lattice_spectra.erase(it);
    }
  }
  return report;
}

}  // namespace zhu::bridge
