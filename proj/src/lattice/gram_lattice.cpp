#include "zhu/lattice/gram_lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace zhu::lattice {

// ---------------------------------------------------------------------------
// Vectors

LatticeVec LatticeVec::basis(Eigen::Index rank, Eigen::Index i) {
  LatticeVec v = zero(rank);
  v.coords(i) = 1;
  return v;
}

bool operator<(const LatticeVec& a, const LatticeVec& b) {
  return std::lexicographical_compare(a.coords.data(), a.coords.data() + a.coords.size(), b.coords.data(),
                                      b.coords.data() + b.coords.size());
}

std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
  os << "(";
  for (Eigen::Index i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << v.coords(i);
  return os << ")";
}

bool DualVec::is_integral() const {
  for (Eigen::Index i = 0; i < coords.size(); ++i)
    if (!coords(i).is_integer()) return false;
  return true;
}

LatticeVec DualVec::to_lattice() const {
  if (!is_integral()) throw std::domain_error("vector is not in the lattice");
  LatticeVec v = LatticeVec::zero(coords.size());
  for (Eigen::Index i = 0; i < coords.size(); ++i) v.coords(i) = coords(i).numerator().get_si();
  return v;
}

bool operator<(const DualVec& a, const DualVec& b) {
  return std::lexicographical_compare(a.coords.data(), a.coords.data() + a.coords.size(), b.coords.data(),
                                      b.coords.data() + b.coords.size());
}

std::ostream& operator<<(std::ostream& os, const DualVec& v) {
  os << "(";
  for (Eigen::Index i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << v.coords(i);
  return os << ")";
}

// ---------------------------------------------------------------------------
// Lattice

GramLattice::GramLattice(IntMatrix gram, QMatrix gram_inverse, std::int64_t det)
    : gram_(std::move(gram)), gram_q_(gram_.cast<Rational>()), gram_inverse_(std::move(gram_inverse)), det_(det) {}

bool GramLattice::in_dual(const DualVec& v) const {
  const QVector p = basis_pairings(v);
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (!p(i).is_integer()) return false;
  return true;
}

GramLattice validate_gram(const IntMatrix& gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0) {
    throw GramError(GramErrorCode::NotSquare, "Gram matrix must be square and nonempty");
  }
  const Eigen::Index d = gram.rows();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (gram(i, j) != gram(j, i)) throw GramError(GramErrorCode::NotSymmetric, "Gram matrix is not symmetric");
    }
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    if (gram(i, i) % 2 != 0) throw GramError(GramErrorCode::OddDiagonal, "odd diagonal");
  }
  const QMatrix q = gram.cast<Rational>();
  for (Eigen::Index i = 1; i <= d; ++i) {
    if (exact_determinant(q.topLeftCorner(i, i)).sign() <= 0) {
      throw GramError(GramErrorCode::NotPositiveDefinite, "Gram matrix is not positive definite");
    }
  }
  const Rational det = exact_determinant(q);
  return GramLattice(gram, exact_inverse(q), det.numerator().get_si());
}

GramLattice validate_gram(const std::vector<std::vector<std::int64_t>>& rows) {
  const auto d = static_cast<Eigen::Index>(rows.size());
  IntMatrix gram(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != d) {
      throw GramError(GramErrorCode::NotSquare, "Gram matrix must be square and nonempty");
    }
    for (Eigen::Index j = 0; j < d; ++j) gram(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return validate_gram(gram);
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithForm smith_normal_form(const IntMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  SmithForm f{m, IntMatrix::Identity(rows, rows), IntMatrix::Identity(cols, cols)};
  IntMatrix& d = f.diagonal;

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1;
      Eigen::Index pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pi < 0 || std::abs(d(i, j)) < std::abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return f;
      d.row(t).swap(d.row(pi));
      f.left.row(t).swap(f.left.row(pi));
      d.col(t).swap(d.col(pj));
      f.right.col(t).swap(f.right.col(pj));

      bool cleared = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        const std::int64_t q = d(i, t) / d(t, t);
        if (q != 0) {
          d.row(i) -= q * d.row(t);
          f.left.row(i) -= q * f.left.row(t);
        }
        cleared &= d(i, t) == 0;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        const std::int64_t q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col(j) -= q * d.col(t);
          f.right.col(j) -= q * f.right.col(t);
        }
        cleared &= d(t, j) == 0;
      }
      if (!cleared) continue;

      // Divisibility: fold a violating row into the pivot row and retry.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i)
        for (Eigen::Index j = t + 1; j < cols && divides; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.row(t) += d.row(i);
            f.left.row(t) += f.left.row(i);
            divides = false;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.row(t) *= -1;
      f.left.row(t) *= -1;
    }
  }
  return f;
}

DiscriminantGroup discriminant_group(const GramLattice& lattice) {
  const SmithForm snf = smith_normal_form(lattice.gram());
  const Eigen::Index d = lattice.rank();
  DiscriminantGroup out;
  std::vector<std::int64_t> factors(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    factors[static_cast<std::size_t>(i)] = snf.diagonal(i, i);
    if (snf.diagonal(i, i) > 1) out.invariant_factors.push_back(snf.diagonal(i, i));
  }

  // The dual lattice is right * diag(1/d_i) * Z^d; walk all residues t_i mod d_i.
  const QMatrix right = snf.right.cast<Rational>();
  std::vector<std::int64_t> t(static_cast<std::size_t>(d), 0);
  while (true) {
    QVector scaled(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      scaled(i) = Rational(Integer(static_cast<long>(t[static_cast<std::size_t>(i)])),
                           Integer(static_cast<long>(factors[static_cast<std::size_t>(i)])));
    }
    QVector rep = right * scaled;
    for (Eigen::Index i = 0; i < d; ++i) rep(i) -= Rational(rep(i).floor());
    out.coset_reps.push_back({rep});

    Eigen::Index pos = 0;
    while (pos < d && ++t[static_cast<std::size_t>(pos)] == factors[static_cast<std::size_t>(pos)]) {
      t[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  std::sort(out.coset_reps.begin(), out.coset_reps.end());
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Ldl {
  QMatrix lower;  ///< unit lower triangular
  QVector diag;
};

Ldl ldl(const QMatrix& g) {
  const Eigen::Index d = g.rows();
  Ldl f{QMatrix::Identity(d, d), QVector::Zero(d)};
  for (Eigen::Index j = 0; j < d; ++j) {
    Rational dj = g(j, j);
    for (Eigen::Index k = 0; k < j; ++k) dj -= f.lower(j, k) * f.lower(j, k) * f.diag(k);
    f.diag(j) = dj;
    for (Eigen::Index i = j + 1; i < d; ++i) {
      Rational s = g(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= f.lower(i, k) * f.lower(j, k) * f.diag(k);
      f.lower(i, j) = s / dj;
    }
  }
  return f;
}

/// Smallest nonnegative integer s with s^2 >= t.
Integer ceil_sqrt(const Rational& t) {
  if (t.sign() <= 0) return 0;
  const Integer c = t.ceil();
  Integer s = sqrt(c);
  if (s * s < c) ++s;
  return s;
}

}  // namespace

std::vector<DualVec> short_vectors(const GramLattice& lattice, const DualVec& rep, const Rational& bound) {
  if (bound.sign() < 0) throw std::invalid_argument("norm bound must be nonnegative");
  const Eigen::Index d = lattice.rank();
  const Ldl f = ldl(lattice.gram().cast<Rational>());

  // <y, y> = sum_j D_j (y_j + sum_{i>j} L_ij y_i)^2, enumerated from the last coordinate down.
  std::vector<DualVec> out;
  QVector y = rep.coords;
  std::function<void(Eigen::Index, const Rational&)> descend = [&](Eigen::Index j, const Rational& remaining) {
    Rational center;
    for (Eigen::Index i = j + 1; i < d; ++i) center -= f.lower(i, j) * y(i);
    const Integer reach = ceil_sqrt(remaining / f.diag(j));
    const Rational offset = center - rep.coords(j);
    const Integer lo = (offset - Rational(reach)).floor();
    const Integer hi = (offset + Rational(reach)).ceil();
    for (Integer x = lo; x <= hi; ++x) {
      y(j) = rep.coords(j) + Rational(x);
      const Rational diff = y(j) - center;
      const Rational used = f.diag(j) * diff * diff;
      if (used > remaining) continue;
      if (j == 0) out.push_back({y});
      else descend(j - 1, remaining - used);
    }
    y(j) = rep.coords(j);
  };
  descend(d - 1, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CosetMinimum> min_coset_reps(const GramLattice& lattice) {
  std::vector<CosetMinimum> out;
  for (const DualVec& rep : discriminant_group(lattice).coset_reps) {
    const std::vector<DualVec> candidates = short_vectors(lattice, rep, lattice.norm(rep));
    Rational min_norm = lattice.norm(rep);
    for (const auto& v : candidates) min_norm = std::min(min_norm, lattice.norm(v));
    CosetMinimum entry{rep, min_norm, {}};
    for (const auto& v : candidates)
      if (lattice.norm(v) == min_norm) entry.minimal_vectors.push_back(v);
    if (std::find(entry.minimal_vectors.begin(), entry.minimal_vectors.end(), rep) == entry.minimal_vectors.end()) {
      entry.lambda = entry.minimal_vectors.front();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<LatticeVec> delta_set(const GramLattice& lattice, const DualVec& lambda) {
  if (lambda.coords.size() != lattice.rank()) throw NotInSError("not in S: wrong dimension");
  if (!lattice.in_dual(lambda)) throw NotInSError("not in S: vector is not in the dual lattice");
  const Rational norm = lattice.norm(lambda);
  std::vector<LatticeVec> out;
  for (const auto& v : short_vectors(lattice, lambda, norm)) {
    if (lattice.norm(v) < norm) throw NotInSError("not in S: a shorter vector exists in its coset");
    out.push_back((v - lambda).to_lattice());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zhu::lattice
