#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "zhu/bridge/identities.hpp"
#include "zhu/exactmath/serialize.hpp"
#include "zhu/lattice/report.hpp"
#include "zhu/rbar/rbar.hpp"
#include "zhu/smith/simple_modules.hpp"

namespace zhu::cli {

namespace {

struct PolySource {
  std::string inline_json;
  std::string file;
  std::optional<unsigned> k;
};

void add_poly_options(CLI::App& cmd, PolySource& src) {
  auto* g = cmd.add_option("--g", src.inline_json, "g as a JSON array, lowest degree first");
  auto* f = cmd.add_option("--g-file", src.file, "file holding g as a JSON array");
  auto* k = cmd.add_option("--g-k", src.k, "use g_k");
  g->excludes(f)->excludes(k);
  f->excludes(k);
}

Poly load_poly(const PolySource& src) {
  if (src.k) {
    if (*src.k == 0) throw std::invalid_argument("--g-k must be positive");
    return rbar::g_k(*src.k);
  }
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw std::invalid_argument("cannot open " + src.file);
    std::stringstream text;
    text << in.rdbuf();
    return parse_poly(text.str());
  }
  if (!src.inline_json.empty()) return parse_poly(src.inline_json);
  throw std::invalid_argument("one of --g, --g-file, --g-k is required");
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
  return out;
}

std::string render(const lattice::DualVec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------

int smith_classify(const Poly& g, std::size_t max_dim, bool json, std::ostream& out) {
  const smith::SmithAlgebra alg(g);
  std::vector<smith::SimpleClassification> found;
  for (std::size_t j = 1; j <= max_dim; ++j) found.push_back(smith::classify_simples(alg, j));
  if (json) {
    Json rows = Json::array();
    for (std::size_t j = 1; j <= max_dim; ++j) {
      Json weights = Json::array();
      for (const auto& w : found[j - 1].rational_weights) weights.push_back(to_json(w));
      rows.push_back({{"dim", j}, {"weights", weights}, {"nonrational", found[j - 1].nonrational_count}});
    }
    out << Json{{"g", to_json(g)}, {"simples", rows}}.dump(2) << "\n";
    return kOk;
  }
  out << "g = " << g << "\n";
  out << std::left << std::setw(6) << "dim" << std::setw(30) << "rational weights" << "nonrational\n";
  for (std::size_t j = 1; j <= max_dim; ++j) {
    const auto& c = found[j - 1];
    out << std::setw(6) << j << std::setw(30) << (c.rational_weights.empty() ? "-" : join(c.rational_weights))
        << c.nonrational_count << "\n";
  }
  return kOk;
}

int smith_check_semisimple(const Poly& g, unsigned max_j, bool json, std::ostream& out) {
  const auto report = smith::semisimplicity_criterion(smith::SmithAlgebra(g), max_j);
  if (json) {
    Json squarefree = Json::array();
    for (const auto& v : report.squarefree) squarefree.push_back({{"j", v.j}, {"squarefree", v.squarefree}});
    Json pairs = Json::array();
    for (const auto& p : report.pairs) {
      pairs.push_back({{"i", p.i}, {"j", p.j}, {"gcd_degree", p.gcd_degree}, {"coprime", p.coprime}});
    }
    out << Json{{"g", to_json(g)}, {"max_j", max_j}, {"squarefree", squarefree}, {"pairs", pairs},
                {"all_pass", report.all_pass}}
               .dump(2)
        << "\n";
  } else {
    out << "g = " << g << "\n";
    std::size_t bad_sq = 0;
    for (const auto& v : report.squarefree) {
      if (v.squarefree) continue;
      ++bad_sq;
      out << "h_" << v.j << " is not squarefree\n";
    }
    std::size_t bad_pairs = 0;
    for (const auto& p : report.pairs) {
      if (p.coprime) continue;
      ++bad_pairs;
      out << "gcd(h_" << p.i << ", h_" << p.j << ") has degree " << p.gcd_degree << "\n";
    }
    out << "squarefree: " << report.squarefree.size() - bad_sq << "/" << report.squarefree.size() << "\n";
    out << "coprime pairs: " << report.pairs.size() - bad_pairs << "/" << report.pairs.size() << "\n";
    out << (report.all_pass ? "PASS" : "FAIL") << "\n";
  }
  return report.all_pass ? kOk : kVerificationFailed;
}

int smith_casimir(const Poly& g, unsigned max_r, bool json, std::ostream& out) {
  const smith::SmithAlgebra alg(g);
  const bool central = smith::is_central(alg, smith::omega(alg));
  bool pass = central;
  Json rows = Json::array();
  std::vector<bool> verdicts;
  for (unsigned r = 0; r <= max_r; ++r) {
    verdicts.push_back(smith::casimir_factorization_check(alg, r));
    pass &= verdicts.back();
    rows.push_back({{"r", r}, {"pass", verdicts.back()}});
  }
  if (json) {
    out << Json{{"g", to_json(g)}, {"omega", smith::to_json(smith::omega(alg))}, {"central", central},
                {"factorization", rows}, {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "g = " << g << "\n";
    out << "u = " << alg.u() << "\n";
    out << "Omega = " << smith::omega(alg) << "\n";
    out << "central: " << (central ? "yes" : "no") << "\n";
    for (unsigned r = 0; r <= max_r; ++r) out << "factorization r=" << r << ": " << (verdicts[r] ? "ok" : "FAIL") << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kVerificationFailed;
}

int rbar_info(int k, bool json, std::ostream& out) {
  if (k <= 0) throw std::invalid_argument("--k must be positive");
  const auto report = rbar::rbar_report(static_cast<unsigned>(k));
  if (json) {
    out << rbar::to_json(report).dump(2) << "\n";
  } else {
    out << "k = " << k << "\n";
    out << std::left << std::setw(10) << "weight" << "dim\n";
    for (const auto& irr : report.irreducibles) out << std::setw(10) << irr.weight.to_string() << irr.dim << "\n";
    out << "algebra_dim: " << report.algebra_dim << "\n";
    out << "semisimple: " << (report.semisimple ? "true" : "false") << "\n";
  }
  return report.semisimple ? kOk : kVerificationFailed;
}

void print_lattice_table(const lattice::LatticeReport& report, std::ostream& out) {
  out << "det: " << report.det << "\n";
  out << "invariant factors:";
  for (const auto f : report.invariant_factors) out << " " << f;
  out << "\n" << std::left << std::setw(24) << "lambda" << std::setw(6) << "dim" << "min_norm\n";
  for (const auto& m : report.modules) {
    out << std::setw(24) << render(m.lambda) << std::setw(6) << m.dim << m.min_norm << "\n";
  }
  out << "algebra_dim: " << report.algebra_dim << "\n";
  out << "semisimple: " << (report.semisimple ? "true" : "false") << "\n";
  out << "relations_verified: " << (report.relations_verified ? "true" : "false") << "\n";
}

Json relations_json(const lattice::RelationReport& relations) {
  Json out = Json::array();
  for (const auto& r : relations.relations) {
    Json bad = Json::array();
    for (const auto& c : r.counterexamples) {
      bad.push_back({{"alpha", lattice::to_json(lattice::DualVec::from(c.alpha))},
                     {"beta", lattice::to_json(lattice::DualVec::from(c.beta))},
                     {"lambda", lattice::to_json(c.lambda)},
                     {"basis_vector", lattice::to_json(lattice::DualVec::from(c.basis_vector))}});
    }
    out.push_back({{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"counterexamples", bad}});
  }
  return out;
}

int lattice_cmd(const std::string& action, const std::string& path, bool json, std::ostream& out) {
  const auto lat = lattice::read_gram_file(path);
  lattice::RelationReport relations;
  const auto report = lattice::analyze_lattice(lat, &relations);
  const bool verify = action == "verify";
  if (json) {
    Json j = lattice::to_json(report);
    if (verify) j["relations"] = relations_json(relations);
    out << j.dump(2) << "\n";
  } else {
    print_lattice_table(report, out);
    if (verify) {
      for (const auto& r : relations.relations) {
        out << std::setw(30) << r.name << (r.pass ? "ok" : "FAIL") << " (" << r.checked << " checks)\n";
        for (const auto& c : r.counterexamples) {
          out << "  alpha=" << c.alpha << " beta=" << c.beta << " lambda=" << c.lambda << " at u_" << c.basis_vector
              << "\n";
        }
      }
    }
  }
  if (!verify) return kOk;
  return report.relations_verified && report.semisimple ? kOk : kVerificationFailed;
}

int identities_verify(const std::string& suite, unsigned max_k, bool json, std::ostream& out) {
  bridge::SuiteBounds bounds;
  bounds.max_k = max_k;
  const auto reports = bridge::run_identity_suite(suite, bounds);
  bool pass = true;
  for (const auto& r : reports) pass &= r.pass;
  if (json) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(bridge::to_json(r));
    out << list.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::ostringstream params;
      for (std::size_t i = 0; i < r.parameters.size(); ++i) params << (i ? "," : "") << r.parameters[i];
      out << std::left << std::setw(12) << r.name << std::setw(8) << params.str() << (r.pass ? "ok" : "FAIL") << "\n";
    }
    out << reports.size() << " identities, " << (pass ? "all pass" : "FAILURES") << "\n";
  }
  return pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smith algebras, their rank-one quotients, and lattice algebras"};
  app.name("zhu");
  app.require_subcommand(1);

  bool json = false;
  PolySource poly;
  std::size_t max_dim = 6;
  unsigned max_j = 40;
  unsigned max_r = 3;
  int k = 0;
  std::string gram;
  std::string suite = "all";
  unsigned max_k = 8;

  auto* smith_cmd = app.add_subcommand("smith", "Smith algebra R(g)");
  smith_cmd->require_subcommand(1);
  auto* classify = smith_cmd->add_subcommand("classify", "finite-dimensional simple modules by dimension");
  add_poly_options(*classify, poly);
  classify->add_option("--max-dim", max_dim, "largest dimension")->check(CLI::PositiveNumber);
  classify->add_flag("--json", json);
  auto* semisimple = smith_cmd->add_subcommand("check-semisimple", "squarefree and coprime h_j");
  add_poly_options(*semisimple, poly);
  semisimple->add_option("--max-j", max_j, "largest j");
  semisimple->add_flag("--json", json);
  auto* casimir = smith_cmd->add_subcommand("casimir", "centrality and factorization of Omega");
  add_poly_options(*casimir, poly);
  casimir->add_option("--max-r", max_r, "largest r");
  casimir->add_flag("--json", json);

  auto* rbar_cmd = app.add_subcommand("rbar", "rank-one quotient algebra");
  rbar_cmd->require_subcommand(1);
  auto* info = rbar_cmd->add_subcommand("info", "irreducibles and algebra dimension");
  info->add_option("--k", k, "k >= 1")->required();
  info->add_flag("--json", json);

  auto* lattice_cmd_app = app.add_subcommand("lattice", "even lattice algebra");
  lattice_cmd_app->require_subcommand(1);
  auto* analyze = lattice_cmd_app->add_subcommand("analyze", "discriminant group, modules, algebra");
  analyze->add_option("--gram", gram, "Gram matrix JSON file")->required();
  analyze->add_flag("--json", json);
  auto* verify = lattice_cmd_app->add_subcommand("verify", "analyze and check every defining relation");
  verify->add_option("--gram", gram, "Gram matrix JSON file")->required();
  verify->add_flag("--json", json);

  auto* identities = app.add_subcommand("identities", "binomial identity suites");
  identities->require_subcommand(1);
  auto* identities_check = identities->add_subcommand("verify", "run a suite");
  identities_check->add_option("--suite", suite, "all|vandermonde|ef|pal|schur")
      ->check(CLI::IsMember({"all", "vandermonde", "ef", "pal", "schur"}));
  identities_check->add_option("--max-k", max_k, "largest k for the k-indexed identities");
  identities_check->add_flag("--json", json);

  std::vector<const char*> argv{"zhu"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*classify) return smith_classify(load_poly(poly), max_dim, json, out);
    if (*semisimple) return smith_check_semisimple(load_poly(poly), max_j, json, out);
    if (*casimir) return smith_casimir(load_poly(poly), max_r, json, out);
    if (*info) return rbar_info(k, json, out);
    if (*analyze) return lattice_cmd("analyze", gram, json, out);
    if (*verify) return lattice_cmd("verify", gram, json, out);
    if (*identities_check) return identities_verify(suite, max_k, json, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "verification error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kBadInput;
}

}  // namespace zhu::cli
