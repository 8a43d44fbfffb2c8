#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zhu/exactmath/polynomial.hpp"
#include "zhu/exactmath/serialize.hpp"

namespace zhu::bridge {

struct IdentityReport {
  std::string name;
  std::vector<long> parameters;
  Poly lhs;
  Poly rhs;
  bool pass = false;
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// sum_{i=0}^{n} C(n,i) C(x,m-i) == C(x+n,m). Throws std::invalid_argument
/// ("outside stated range") unless m >= n.
IdentityReport identity_vandermonde(unsigned n, unsigned m);

/// sum_{i=0}^{k-1} C(k-1,i) C(x,2k-1-i) == C(x+k-1,2k-1).
IdentityReport identity_ef(unsigned k);

/// C(x+k,2k) - C(k-x,2k) == C(x+k-1,2k-1).
IdentityReport identity_pal(unsigned k);

/// Schur polynomial p_r under x_n -> (-1)^{n-1} x equals C(x,r).
IdentityReport identity_schur(unsigned r);

/// h(-n_1)...h(-n_r)1 reduces to sign * h^power with sign = (-1)^{n_1+...+n_r+r}, power = r.
/// Throws std::invalid_argument on any n_i < 1.
std::pair<int, unsigned> weight_reduction(const std::vector<unsigned>& ns);

/// Coefficient polynomial of the product a_{i-1} b for lattice vectors with
/// <alpha,alpha> = alpha_norm and <alpha,beta> = beta_pairing, after specialization
/// to one variable: 0 when i - 1 >= -beta_pairing, else C(x, n - i) with n = -beta_pairing.
Poly schur_vertex_coefficient(long alpha_norm, long beta_pairing, unsigned i);

struct SuiteBounds {
  unsigned max_nm = 12;  ///< Vandermonde: 0 <= n <= m <= max_nm
  unsigned max_k = 8;    ///< e*f and pal identities: 1 <= k <= max_k
  unsigned max_r = 12;   ///< Schur specialization: 0 <= r <= max_r
};

/// suite is one of "all", "vandermonde", "ef", "pal", "schur"; anything else throws std::invalid_argument.
std::vector<IdentityReport> run_identity_suite(const std::string& suite, const SuiteBounds& bounds = {});

Json to_json(const IdentityReport& report);
IdentityReport identity_report_from_json(const Json& j);

}  // namespace zhu::bridge
