#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "coconvex/error.hpp"
#include "coconvex/scalar.hpp"

// Exact linear algebra over a field scalar. Everything here pivots on the
// first nonzero entry, never on magnitude, so it is only meaningful for
// exact scalar types.
namespace coconvex::linalg {

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
template <typename T>
std::vector<Eigen::Index> rref(MatrixX<T>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const T inv = T(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const T factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using T = typename Derived::Scalar;
  MatrixX<T> m = input;
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  T det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const T factor = m(r, col) / m(col, col);
      m.row(r).tail(n - col) -= factor * m.row(col).tail(n - col);
    }
  }
  return det;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& input) {
  MatrixX<typename Derived::Scalar> m = input;
  return static_cast<Eigen::Index>(rref(m).size());
}

/// Basis of {x : m x = 0}, one basis vector per column.
template <typename Derived>
MatrixX<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& input) {
  using T = typename Derived::Scalar;
  MatrixX<T> m = input;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  MatrixX<T> basis(m.cols(), m.cols() - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorX<T> v = VectorX<T>::Zero(m.cols());
    v(free) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -m(static_cast<Eigen::Index>(r), free);
    basis.col(out++) = v;
  }
  return basis;
}

/// A solution of m x = rhs if the system is consistent. Free variables are
/// set to zero, so the solution is unique whenever m has full column rank.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& m,
                                                        const Eigen::MatrixBase<DerivedB>& rhs) {
  using T = typename DerivedA::Scalar;
  MatrixX<T> aug(m.rows(), m.cols() + 1);
  aug << m, rhs;
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  VectorX<T> x = VectorX<T>::Zero(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), m.cols());
  return x;
}

/// Stacks vectors as the columns of a matrix.
template <typename T>
MatrixX<T> columns(const std::vector<VectorX<T>>& vectors, Eigen::Index rows) {
  MatrixX<T> m(rows, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vectors[i];
  return m;
}

}  // namespace coconvex::linalg
