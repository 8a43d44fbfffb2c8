#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "zhu/exactmath/polynomial.hpp"
#include "zhu/exactmath/rational.hpp"
#include "zhu/exactmath/serialize.hpp"

namespace zhu::smith {

enum class Generator : unsigned char { A, B, H };

using Word = std::vector<Generator>;

/// Parses a string over {A, B, H}; throws std::invalid_argument on other letters.
Word parse_word(std::string_view letters);

/// The PBW monomial B^m H^n A^k.
struct NcMonomial {
  unsigned m = 0;
  unsigned n = 0;
  unsigned k = 0;

  /// Z-grading with deg A = 1 = -deg B, deg H = 0.
  int degree() const { return static_cast<int>(k) - static_cast<int>(m); }

  friend auto operator<=>(const NcMonomial&, const NcMonomial&) = default;
};

/// Finite rational combination of PBW monomials. Zero coefficients are never stored.
class NcElement {
 public:
  using Terms = std::map<NcMonomial, Rational>;

  NcElement() = default;
  NcElement(const Rational& scalar);  // NOLINT(google-explicit-constructor)

  static NcElement monomial(const NcMonomial& mono, const Rational& c = Rational(1));
  static NcElement generator(Generator g);
  /// p(H).
  static NcElement in_h(const Poly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const NcMonomial& mono) const;

  void add_term(const NcMonomial& mono, const Rational& c);

  /// The common degree when every monomial has the same grading degree.
  std::optional<int> homogeneous_degree() const;

  NcElement& operator+=(const NcElement& rhs);
  NcElement& operator-=(const NcElement& rhs);
  NcElement& operator*=(const Rational& c);
  friend NcElement operator+(NcElement a, const NcElement& b) { return a += b; }
  friend NcElement operator-(NcElement a, const NcElement& b) { return a -= b; }
  friend NcElement operator*(NcElement a, const Rational& c) { return a *= c; }
  friend NcElement operator*(const Rational& c, NcElement a) { return a *= c; }
  friend bool operator==(const NcElement& a, const NcElement& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const NcElement& e);

 private:
  Terms terms_;
};

/// The algebra R(g): generators A, B, H with HA - AH = A, HB - BH = -B, AB - BA = g(H).
class SmithAlgebra {
 public:
  /// Also computes the companion polynomial u with g(x) = (u(x+1) - u(x))/2 and u(0) = 0.
  explicit SmithAlgebra(Poly g);

  const Poly& g() const { return g_; }
  const Poly& u() const { return u_; }

 private:
  Poly g_;
  Poly u_;
};

inline SmithAlgebra new_smith(Poly g) { return SmithAlgebra(std::move(g)); }

/// Solves (u(x+1) - u(x))/2 = g with u(0) = 0 through the binomial basis:
/// g = sum c_r C(x, r) gives u = 2 sum c_r C(x, r+1).
Poly companion_polynomial(const Poly& g);

/// h_j(x) = g(x) + g(x-1) + ... + g(x-j).
Poly h_sum(const SmithAlgebra& alg, unsigned j);

/// Product in PBW normal form, via the closed commutation rules
/// A f(H) = f(H-1) A, f(H) B = B f(H-1), A B^m = B^m A + B^{m-1} h_{m-1}(H).
NcElement nc_mul(const SmithAlgebra& alg, const NcElement& a, const NcElement& b);

/// a^e in normal form (a^0 = 1).
NcElement nc_pow(const SmithAlgebra& alg, const NcElement& a, unsigned exponent);

NcElement commutator(const SmithAlgebra& alg, const NcElement& a, const NcElement& b);

/// Omega = AB + BA + (u(H+1) + u(H))/2, in normal form.
NcElement omega(const SmithAlgebra& alg);

/// True iff e commutes with A, B and H.
bool is_central(const SmithAlgebra& alg, const NcElement& e);

/// 2^{r+1} A^{r+1} B^{r+1} == (Omega - u(H)) (Omega - u(H-1)) ... (Omega - u(H-r)).
bool casimir_factorization_check(const SmithAlgebra& alg, unsigned r);

// Word rewriting. Independent of nc_mul; the two serve as oracles for each other.

enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// Rewrites a word to PBW normal form with the rules
///   A H -> H A - A,   H B -> B H - B,   A B -> B A + g(H),
/// applied to one offending adjacent pair at a time until none remain.
NcElement normal_form(const SmithAlgebra& alg, std::span<const Generator> word,
                      RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

/// Termination measure of the rewriting system: inversions of (A before B),
/// (A before H), (H before B). Every rule application strictly decreases it
/// lexicographically in each resulting word.
std::array<std::size_t, 3> inversion_measure(std::span<const Generator> word);

/// Applies the rewrite rule at the adjacent pair (position, position + 1).
/// Throws std::invalid_argument if that pair is already in normal order.
std::map<Word, Rational> rewrite_at(const SmithAlgebra& alg, std::span<const Generator> word, std::size_t position);

Json to_json(const NcElement& e);
NcElement nc_from_json(const Json& j);

}  // namespace zhu::smith
