#include "zhu/exactmath/operator_algebra.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace zhu {

namespace {

// Square matrices stored by column-major flat index, zeros dropped.
using SparseMatrix = SpanBasis<Rational>::Sparse;

SparseMatrix to_sparse(const QMatrix& m) {
  SparseMatrix out;
  for (Eigen::Index k = 0; k < m.size(); ++k)
    if (!m.data()[k].is_zero()) out.emplace_hint(out.end(), k, m.data()[k]);
  return out;
}

SparseMatrix sparse_product(const SparseMatrix& a, const SparseMatrix& b, Eigen::Index n) {
  // Row k of b as (column, value).
  std::vector<std::vector<std::pair<Eigen::Index, const Rational*>>> b_rows(static_cast<std::size_t>(n));
  for (const auto& [idx, v] : b) b_rows[static_cast<std::size_t>(idx % n)].emplace_back(idx / n, &v);
  SparseMatrix out;
  for (const auto& [idx, v] : a) {
    const Eigen::Index i = idx % n;
    for (const auto& [j, w] : b_rows[static_cast<std::size_t>(idx / n)]) out[j * n + i] += v * *w;
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

QMatrix unflatten(const QVector& v, Eigen::Index n) { return Eigen::Map<const QMatrix>(v.data(), n, n); }

using SparseEntries = std::vector<std::tuple<Eigen::Index, Eigen::Index, Rational>>;

SparseEntries nonzeros(const QMatrix& m) {
  SparseEntries out;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) out.emplace_back(i, j, m(i, j));
  return out;
}

}  // namespace

QMatrix block_diagonal(std::span<const QMatrix> blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  QMatrix out = QMatrix::Zero(n, n);
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    out.block(offset, offset, b.rows(), b.cols()) = b;
    offset += b.rows();
  }
  return out;
}

StructureAlgebra operator_span(std::span<const QMatrix> generators) {
  Eigen::Index n = generators.empty() ? 0 : generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generators must be square of equal size");
  }

  SpanBasis<Rational> span(n * n);
  std::vector<SparseMatrix> elements;
  auto try_add = [&](SparseMatrix m) {
    if (!span.insert(m)) return false;
    elements.push_back(std::move(m));
    return true;
  };

  try_add(to_sparse(QMatrix::Identity(n, n)));
  for (const auto& g : generators) try_add(to_sparse(g));

  StructureAlgebra out;
  std::size_t fresh_from = 0;
  while (true) {
    const std::size_t count = elements.size();
    bool grew = false;
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        if (i < fresh_from && j < fresh_from) continue;
        grew |= try_add(sparse_product(elements[i], elements[j], n));
      }
    }
    if (!grew) break;
    ++out.closure_rounds;
    fresh_from = count;
  }

  std::vector<SparseMatrix> sparse_basis;
  for (const auto& row : span.rows()) {
    out.basis.push_back(unflatten(row, n));
    sparse_basis.push_back(to_sparse(out.basis.back()));
  }
  const std::size_t dim = out.basis.size();
  out.left_mult.assign(dim, QMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto coords = span.coordinates(sparse_product(sparse_basis[i], sparse_basis[j], n));
      if (!coords) throw std::logic_error("operator span is not closed under multiplication");
      out.left_mult[i].col(static_cast<Eigen::Index>(j)) = *coords;
    }
  }
  return out;
}

StructureAlgebra from_structure_constants(std::vector<QMatrix> left_mult) {
  StructureAlgebra out;
  out.left_mult = std::move(left_mult);
  return out;
}

void check_closed(const StructureAlgebra& algebra) {
  const auto dim = static_cast<Eigen::Index>(algebra.dimension());
  for (const auto& l : algebra.left_mult) {
    if (l.rows() != dim || l.cols() != dim) {
      throw std::invalid_argument("structure constants are not closed: left multiplication matrix has wrong shape");
    }
  }
  if (algebra.basis.empty()) return;
  if (static_cast<Eigen::Index>(algebra.basis.size()) != dim) {
    throw std::invalid_argument("structure constants are not closed: basis and constants disagree in size");
  }
  const Eigen::Index n = algebra.basis.front().rows();
  std::vector<SparseMatrix> sparse_basis;
  for (const auto& b : algebra.basis) {
    if (b.rows() != n || b.cols() != n) throw std::invalid_argument("structure constants are not closed: basis shapes differ");
    sparse_basis.push_back(to_sparse(b));
  }
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      SparseMatrix expected;
      for (Eigen::Index k = 0; k < dim; ++k) {
        const Rational& c = algebra.left_mult[static_cast<std::size_t>(i)](k, j);
        if (c.is_zero()) continue;
        for (const auto& [idx, v] : sparse_basis[static_cast<std::size_t>(k)]) expected[idx] += c * v;
      }
      std::erase_if(expected, [](const auto& e) { return e.second.is_zero(); });
      if (sparse_product(sparse_basis[static_cast<std::size_t>(i)], sparse_basis[static_cast<std::size_t>(j)], n) != expected) {
        throw std::invalid_argument("structure constants are not closed: product leaves the span");
      }
    }
  }
}

bool is_associative(const StructureAlgebra& algebra) {
  const std::size_t dim = algebra.dimension();
  std::vector<SparseEntries> sparse;
  sparse.reserve(dim);
  for (const auto& l : algebra.left_mult) sparse.push_back(nonzeros(l));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      // L_{b_i b_j} = sum_k c_k L_k, with c = column j of L_i.
      QMatrix lhs = QMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
      for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(dim); ++k) {
        const Rational& c = algebra.left_mult[i](k, static_cast<Eigen::Index>(j));
        if (c.is_zero()) continue;
        for (const auto& [r, s, v] : sparse[static_cast<std::size_t>(k)]) lhs(r, s) += c * v;
      }
      const QMatrix rhs = exact_product(algebra.left_mult[i], algebra.left_mult[j]);
      if (!exactly_equal(lhs, rhs)) return false;
    }
  }
  return true;
}

QMatrix trace_form(const StructureAlgebra& algebra) {
  const std::size_t dim = algebra.dimension();
  std::vector<SparseEntries> sparse;
  sparse.reserve(dim);
  for (const auto& l : algebra.left_mult) sparse.push_back(nonzeros(l));
  QMatrix form = QMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      // trace(L_i L_j) = sum_{k,l} L_i(k,l) L_j(l,k)
      Rational t;
      for (const auto& [k, l, v] : sparse[i]) {
        const Rational& w = algebra.left_mult[j](l, k);
        if (!w.is_zero()) t += v * w;
      }
      form(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = t;
      form(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = t;
    }
  }
  return form;
}

bool is_semisimple(const StructureAlgebra& algebra) {
  check_closed(algebra);
  const QMatrix form = trace_form(algebra);
  return exact_rank(form) == static_cast<Eigen::Index>(algebra.dimension());
}

}  // namespace zhu
