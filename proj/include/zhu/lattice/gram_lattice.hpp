#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zhu/exactmath/matrix.hpp"

namespace zhu::lattice {

/// Element of L, in coordinates of the Gram basis alpha_1 .. alpha_d.
struct LatticeVec {
  IntVector coords;

  static LatticeVec zero(Eigen::Index rank) { return {IntVector::Zero(rank)}; }
  static LatticeVec basis(Eigen::Index rank, Eigen::Index i);

  bool is_zero() const { return coords.isZero(); }
  Eigen::Index size() const { return coords.size(); }

  friend LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) { return {a.coords + b.coords}; }
  friend LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) { return {a.coords - b.coords}; }
  friend LatticeVec operator-(const LatticeVec& a) { return {-a.coords}; }
  friend bool operator==(const LatticeVec& a, const LatticeVec& b) { return a.coords == b.coords; }
  friend bool operator<(const LatticeVec& a, const LatticeVec& b);
  friend std::ostream& operator<<(std::ostream& os, const LatticeVec& v);
};

/// Element of the rational span of L (in particular of the dual lattice), in Gram-basis coordinates.
struct DualVec {
  QVector coords;

  static DualVec zero(Eigen::Index rank) { return {QVector::Zero(rank)}; }
  static DualVec from(const LatticeVec& v) { return {v.coords.cast<Rational>()}; }

  bool is_integral() const;
  /// Throws std::domain_error unless is_integral().
  LatticeVec to_lattice() const;

  friend DualVec operator+(const DualVec& a, const DualVec& b) { return {a.coords + b.coords}; }
  friend DualVec operator-(const DualVec& a, const DualVec& b) { return {a.coords - b.coords}; }
  friend bool operator==(const DualVec& a, const DualVec& b) { return exactly_equal(a.coords, b.coords); }
  friend bool operator<(const DualVec& a, const DualVec& b);
  friend std::ostream& operator<<(std::ostream& os, const DualVec& v);
};

enum class GramErrorCode { NotSquare, NotSymmetric, OddDiagonal, NotPositiveDefinite };

class GramError : public std::invalid_argument {
 public:
  GramError(GramErrorCode code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  GramErrorCode code() const { return code_; }

 private:
  GramErrorCode code_;
};

/// Positive-definite even lattice given by its Gram matrix. Construct through validate_gram().
class GramLattice {
 public:
  Eigen::Index rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const QMatrix& gram_inverse() const { return gram_inverse_; }
  std::int64_t det() const { return det_; }

  std::int64_t pairing(const LatticeVec& a, const LatticeVec& b) const { return a.coords.dot(gram_ * b.coords); }
  Rational pairing(const DualVec& a, const DualVec& b) const { return a.coords.dot(gram_q_ * b.coords); }
  Rational pairing(const DualVec& a, const LatticeVec& b) const { return pairing(a, DualVec::from(b)); }
  std::int64_t norm(const LatticeVec& v) const { return pairing(v, v); }
  Rational norm(const DualVec& v) const { return pairing(v, v); }

  /// G * v, i.e. the pairings of v with the basis vectors.
  QVector basis_pairings(const DualVec& v) const { return gram_q_ * v.coords; }

  /// <L, v> contained in Z.
  bool in_dual(const DualVec& v) const;

 private:
  friend GramLattice validate_gram(const IntMatrix& gram);
  GramLattice(IntMatrix gram, QMatrix gram_inverse, std::int64_t det);

  IntMatrix gram_;
  QMatrix gram_q_;
  QMatrix gram_inverse_;
  std::int64_t det_;
};

/// Checks symmetry, even diagonal and positive definiteness (leading principal minors).
/// Throws GramError with the matching code.
GramLattice validate_gram(const IntMatrix& gram);
GramLattice validate_gram(const std::vector<std::vector<std::int64_t>>& rows);

struct SmithForm {
  IntMatrix diagonal;  ///< left * input * right
  IntMatrix left;
  IntMatrix right;
};

/// Smith normal form over Z with unimodular transforms; diagonal entries nonnegative,
/// each dividing the next.
SmithForm smith_normal_form(const IntMatrix& m);

struct DiscriminantGroup {
  std::vector<std::int64_t> invariant_factors;  ///< the factors > 1
  std::vector<DualVec> coset_reps;              ///< coordinates in [0, 1), sorted
};

DiscriminantGroup discriminant_group(const GramLattice& lattice);

/// All mu in rep + L with <mu, mu> <= bound, sorted lexicographically. Exact
/// Fincke-Pohst style enumeration over the rational LDL^T factorization of G.
std::vector<DualVec> short_vectors(const GramLattice& lattice, const DualVec& rep, const Rational& bound);

struct CosetMinimum {
  DualVec lambda;                      ///< chosen element of S in this coset
  Rational min_norm;
  std::vector<DualVec> minimal_vectors;  ///< all minimal-norm vectors, equals lambda + Delta(lambda)
};

/// One entry per coset of L in its dual, in the order of discriminant_group().coset_reps.
/// The chosen lambda is the normalized representative when it is already minimal,
/// else the first minimal vector.
std::vector<CosetMinimum> min_coset_reps(const GramLattice& lattice);

class NotInSError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Delta(lambda) = { alpha in L : <lambda+alpha, lambda+alpha> = <lambda, lambda> }, sorted.
/// Throws NotInSError unless lambda is in the dual lattice and of minimal norm in its coset.
std::vector<LatticeVec> delta_set(const GramLattice& lattice, const DualVec& lambda);

}  // namespace zhu::lattice
