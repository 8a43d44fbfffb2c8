#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "zhu/exactmath/polynomial.hpp"
#include "zhu/exactmath/rational.hpp"

namespace zhu {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

template <typename Scalar>
bool scalar_is_zero(const Scalar& x) {
  if constexpr (requires { x.is_zero(); }) return x.is_zero();
  else return x == Scalar(0);
}

/// Exact zero test; Eigen's isZero() is tolerance based.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!scalar_is_zero(m(i, j))) return false;
  return true;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && is_zero(a - b);
}

template <typename Scalar>
struct RowEchelon {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
  std::vector<Eigen::Index> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form; pivots are chosen as the first nonzero entry
/// scanning rows top to bottom, so the result is deterministic.
template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{input, {}};
  auto& m = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && scalar_is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || scalar_is_zero(m(i, col))) continue;
      const Scalar f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// a * b without Eigen's blocked kernel, skipping zero entries of a. For exact
/// scalars the packing copies dominate otherwise, and our operands are sparse.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_product(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(a.rows(), b.cols());
  // Nonzero columns of each row of b; both operands are usually sparse.
  std::vector<std::vector<Eigen::Index>> b_rows(static_cast<std::size_t>(b.rows()));
  for (Eigen::Index k = 0; k < b.rows(); ++k)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (!scalar_is_zero(b(k, j))) b_rows[static_cast<std::size_t>(k)].push_back(j);
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const auto& cols = b_rows[static_cast<std::size_t>(k)];
    if (cols.empty()) continue;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Scalar& f = a(i, k);
      if (scalar_is_zero(f)) continue;
      for (const Eigen::Index j : cols) out(i, j) += f * b(k, j);
    }
  }
  return out;
}

/// Determinant by exact Gaussian elimination.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  Scalar det(1);
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && scalar_is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (scalar_is_zero(m(i, col))) continue;
      const Scalar f = m(i, col) / m(col, col);
      for (Eigen::Index j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Exact inverse via Gauss-Jordan; throws std::domain_error when singular.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = input.rows();
  if (n != input.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  Mat augmented(n, 2 * n);
  augmented << input, Mat::Identity(n, n);
  const auto echelon = rref(augmented);
  if (static_cast<Eigen::Index>(echelon.pivots.size()) < n || echelon.pivots[static_cast<std::size_t>(n - 1)] >= n) {
    throw std::domain_error("matrix is singular");
  }
  return echelon.reduced.rightCols(n);
}

/// p(M) by Horner's scheme.
template <typename Scalar, typename Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> evaluate_at_matrix(const Polynomial<Scalar>& p,
                                                                         const Eigen::MatrixBase<Derived>& m) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat acc = Mat::Zero(m.rows(), m.cols());
  const Mat id = Mat::Identity(m.rows(), m.cols());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = (acc * m).eval() + id * (*it);
  return acc;
}

/// Incrementally maintained basis of a subspace of Scalar^n, kept in reduced
/// row echelon form. Rows keep their insertion order; pivots are recorded per row.
template <typename Scalar>
class SpanBasis {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  /// Index -> value, zeros never stored.
  using Sparse = std::map<Eigen::Index, Scalar>;

  explicit SpanBasis(Eigen::Index ambient_dim) : ambient_dim_(ambient_dim) {}

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  /// Adds v if it is independent of the current span; returns whether it was.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    Eigen::Index pivot = 0;
    while (pivot < r.size() && scalar_is_zero(r(pivot))) ++pivot;
    if (pivot == r.size()) return false;
    const std::vector<Eigen::Index> support = nonzeros(r);
    const Scalar lead = r(pivot);
    for (const Eigen::Index j : support) r(j) /= lead;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto& row = rows_[i];
      if (scalar_is_zero(row(pivot))) continue;
      const Scalar f = row(pivot);
      for (const Eigen::Index j : support) row(j) -= f * r(j);
      support_[i] = nonzeros(row);
    }
    pivot_row_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(r));
    support_.push_back(support);
    pivots_.push_back(pivot);
    return true;
  }

  /// Same as insert() for a sparse vector; the basis evolves identically.
  bool insert(const Sparse& v) {
    const Sparse r = reduce(v);
    if (r.empty()) return false;
    Vector dense = Vector::Zero(ambient_dim_);
    for (const auto& [j, x] : r) dense(j) = x;
    return insert(dense);
  }

  /// Coordinates of a sparse vector, or nullopt if it is outside the span.
  std::optional<Vector> coordinates(const Sparse& v) const {
    Vector coords = Vector::Zero(static_cast<Eigen::Index>(rows_.size()));
    for (const auto& [j, x] : v) {
      const auto it = pivot_row_.find(j);
      if (it != pivot_row_.end()) coords(static_cast<Eigen::Index>(it->second)) = x;
    }
    if (!reduce(v).empty()) return std::nullopt;
    return coords;
  }

  /// Coordinates of v in the current basis, or nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    Vector coords(static_cast<Eigen::Index>(rows_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) coords(static_cast<Eigen::Index>(i)) = v(pivots_[i]);
    Vector residual = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar& c = coords(static_cast<Eigen::Index>(i));
      if (scalar_is_zero(c)) continue;
      for (const Eigen::Index j : support_[i]) residual(j) -= c * rows_[i](j);
    }
    if (!is_zero(residual)) return std::nullopt;
    return coords;
  }

 private:
  static std::vector<Eigen::Index> nonzeros(const Vector& v) {
    std::vector<Eigen::Index> out;
    for (Eigen::Index j = 0; j < v.size(); ++j)
      if (!scalar_is_zero(v(j))) out.push_back(j);
    return out;
  }

  // Rows are kept fully reduced, so the coefficient of row i is read off the
  // input at pivot i before any subtraction.
  Sparse reduce(const Sparse& v) const {
    Sparse r = v;
    for (const auto& [j, x] : v) {
      const auto it = pivot_row_.find(j);
      if (it == pivot_row_.end()) continue;
      const auto& row = rows_[it->second];
      for (const Eigen::Index c : support_[it->second]) {
        auto& slot = r[c];
        slot -= x * row(c);
        if (scalar_is_zero(slot)) r.erase(c);
      }
    }
    return r;
  }

  Vector reduce(Vector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar f = v(pivots_[i]);
      if (scalar_is_zero(f)) continue;
      for (const Eigen::Index j : support_[i]) v(j) -= f * rows_[i](j);
    }
    return v;
  }

  Eigen::Index ambient_dim_;
  std::vector<Vector> rows_;
  std::vector<std::vector<Eigen::Index>> support_;
  std::vector<Eigen::Index> pivots_;
  std::map<Eigen::Index, std::size_t> pivot_row_;
};

}  // namespace zhu
