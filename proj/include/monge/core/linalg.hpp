#pragma once

// Exact dense linear algebra over a field scalar (in practice monge::Rational).
// Every routine pivots on the first nonzero entry, so no rounding-sensitive
// pivot choice is made and the results are exact.

#include "monge/core/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace monge {

template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;            // reduced row echelon form
  std::vector<Eigen::Index> pivots;   // pivot column of each nonzero row
};

template <typename Derived>
Echelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.reduced = m;
  MatrixX<Scalar>& a = out.reduced;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(row_reduce(m).pivots.size());
}

/// Basis of the right null space, one vector per column.
template <typename Derived>
MatrixX<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_reduce(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const Eigen::Index free_count = cols - static_cast<Eigen::Index>(ech.pivots.size());
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(cols, free_count);
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      basis(ech.pivots[r], k) = -ech.reduced(static_cast<Eigen::Index>(r), f);
    }
    ++k;
  }
  return basis;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(m.rows() == m.cols());
  MatrixX<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Solves a x = b for square nonsingular a; nullopt when a is singular.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  MatrixX<Scalar> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto ech = row_reduce(aug);
  if (static_cast<Eigen::Index>(ech.pivots.size()) != n || ech.pivots.back() != n - 1) return std::nullopt;
  return VectorX<Scalar>(ech.reduced.col(n));
}

/// Indices of a maximal linearly independent subset of the rows, chosen greedily
/// in order.
template <typename Derived>
std::vector<Eigen::Index> independent_rows(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Index> chosen;
  std::vector<VectorX<Scalar>> basis;  // reduced rows
  std::vector<Eigen::Index> lead;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    VectorX<Scalar> v = m.row(i).transpose();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (v(lead[k]) != 0) v -= v(lead[k]) * basis[k];
    }
    Eigen::Index c = 0;
    while (c < v.size() && v(c) == 0) ++c;
    if (c == v.size()) continue;
    v /= v(c);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k](c) != 0) basis[k] -= basis[k](c) * v;
    }
    basis.push_back(std::move(v));
    lead.push_back(c);
    chosen.push_back(i);
  }
  return chosen;
}

}  // namespace monge
