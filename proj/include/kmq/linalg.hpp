#pragma once

// Exact dense linear algebra over a field. Every routine here assumes the
// scalar has exact arithmetic (Rational, or any other exact field type);
// pivots are tested against zero, never against a tolerance.

#include "kmq/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kmq::linalg {

using Eigen::Index;

template <class Scalar>
struct Echelon {
  Matrix<Scalar> reduced;     // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class Scalar>
Echelon<Scalar> row_echelon(Matrix<Scalar> m) {
  Echelon<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pick = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pick = r;
        break;
      }
    }
    if (pick < 0) continue;
    if (pick != row) m.row(pick).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) {
      if (m(row, c) != 0) m(row, c) *= inv;
    }
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Scalar>
Index rank(const Matrix<Scalar>& m) {
  if (m.size() == 0) return 0;
  return row_echelon<Scalar>(m).rank();
}

/// Columns form a basis of the null space {x : m x = 0}.
template <class Scalar>
Matrix<Scalar> kernel(const Matrix<Scalar>& m) {
  const Index n = m.cols();
  if (m.rows() == 0) return Matrix<Scalar>::Identity(n, n);
  const auto ech = row_echelon<Scalar>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, n - ech.rank());
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (Index r = 0; r < ech.rank(); ++r) {
      basis(ech.pivots[static_cast<std::size_t>(r)], k) = -ech.reduced(r, free);
    }
    ++k;
  }
  return basis;
}

template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << m, Matrix<Scalar>::Identity(n, n);
  const auto ech = row_echelon<Scalar>(std::move(aug));
  if (ech.rank() < n || (n > 0 && ech.pivots.back() >= n)) {
    throw std::domain_error("inverse: matrix is singular");
  }
  return ech.reduced.rightCols(n);
}

/// Some solution of a x = b, if one exists.
template <class Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = row_echelon<Scalar>(std::move(aug));
  if (ech.rank() > 0 && ech.pivots.back() == a.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (Index r = 0; r < ech.rank(); ++r) {
    x(ech.pivots[static_cast<std::size_t>(r)]) = ech.reduced(r, a.cols());
  }
  return x;
}

/// True when every column of `sub` lies in the column span of `span`.
template <class Scalar>
bool spans(const Matrix<Scalar>& span, const Matrix<Scalar>& sub) {
  if (sub.cols() == 0) return true;
  if (span.cols() == 0) return rank<Scalar>(sub) == 0;
  Matrix<Scalar> both(span.rows(), span.cols() + sub.cols());
  both << span, sub;
  return rank<Scalar>(both) == rank<Scalar>(span);
}

/// Symmetric elimination with diagonal pivots (an LDL^T sweep).
///
/// `order` lists the pivot indices in the order they were used; they index a
/// principal submatrix that is nonsingular and of full rank. `psd` is false as
/// soon as a negative pivot appears or a zero diagonal entry has a nonzero row,
/// either of which rules out positive semidefiniteness.
template <class Scalar>
struct SymmetricPivots {
  std::vector<Scalar> pivots;
  std::vector<Index> order;
  bool psd = true;

  Index rank() const { return static_cast<Index>(order.size()); }
};

template <class Scalar>
SymmetricPivots<Scalar> symmetric_pivots(Matrix<Scalar> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("symmetric_pivots: matrix not square");
  const Index n = m.rows();
  SymmetricPivots<Scalar> out;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (;;) {
    Index p = -1;
    for (Index i = 0; i < n; ++i) {
      if (!used[static_cast<std::size_t>(i)] && m(i, i) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) break;
    used[static_cast<std::size_t>(p)] = true;
    const Scalar pivot = m(p, p);
    if (pivot < 0) out.psd = false;
    out.pivots.push_back(pivot);
    out.order.push_back(p);
    for (Index i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)] || m(i, p) == 0) continue;
      const Scalar factor = m(i, p) / pivot;
      for (Index j = 0; j < n; ++j) {
        if (!used[static_cast<std::size_t>(j)] && m(p, j) != 0) m(i, j) -= factor * m(p, j);
      }
    }
  }
  for (Index i = 0; i < n && out.psd; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    for (Index j = 0; j < n; ++j) {
      if (!used[static_cast<std::size_t>(j)] && m(i, j) != 0) {
        out.psd = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace kmq::linalg
