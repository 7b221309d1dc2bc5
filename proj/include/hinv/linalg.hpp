// Small dense elimination routines. Exact for Rational, pivoted by magnitude for double.
#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "hinv/rational.hpp"

namespace hinv {

namespace detail {

// Row index of the pivot for column c among rows r.., or -1.
template <typename Scalar>
Eigen::Index pick_pivot(const Matrix<Scalar>& a, Eigen::Index r, Eigen::Index c) {
  Eigen::Index best = -1;
  if constexpr (std::is_floating_point_v<Scalar>) {
    Scalar mag = 0;
    for (Eigen::Index i = r; i < a.rows(); ++i)
      if (std::abs(a(i, c)) > mag) mag = std::abs(a(i, c)), best = i;
  } else {
    for (Eigen::Index i = r; i < a.rows(); ++i)
      if (!is_zero(a(i, c))) return i;
  }
  return best;
}

}  // namespace detail

template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Eigen::Index n = a.rows();
  Scalar det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = detail::pick_pivot(a, c, c);
    if (p < 0) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      Scalar f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

// det of the k x k leading block for k = 1..n.
template <typename Scalar>
std::vector<Scalar> leading_minors(const Matrix<Scalar>& a) {
  std::vector<Scalar> out;
  for (Eigen::Index k = 1; k <= a.rows(); ++k)
    out.push_back(determinant<Scalar>(a.topLeftCorner(k, k)));
  return out;
}

// Unique solution of a square nonsingular system.
template <typename Scalar>
Vector<Scalar> solve(Matrix<Scalar> a, Vector<Scalar> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = detail::pick_pivot(a, c, c);
    if (p < 0) throw std::domain_error("solve: singular system");
    if (p != c) {
      a.row(p).swap(a.row(c));
      std::swap(b(p), b(c));
    }
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      Scalar f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
      b(i) -= f * b(c);
    }
  }
  Vector<Scalar> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar s = b(i);
    for (Eigen::Index j = i + 1; j < n; ++j) s -= a(i, j) * x(j);
    x(i) = s / a(i, i);
  }
  return x;
}

// Some solution of a possibly rank-deficient or overdetermined exact system,
// free variables set to zero; nullopt when inconsistent.
inline std::optional<VectorQ> solve_consistent(MatrixQ a, VectorQ b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("solve_consistent: dimension mismatch");
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = detail::pick_pivot(a, r, c);
    if (p < 0) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      std::swap(b(p), b(r));
    }
    Rational inv = 1 / a(r, c);
    a.row(r) *= inv;
    b(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      Rational f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
      b(i) -= f * b(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    if (!is_zero(b(i))) return std::nullopt;
  VectorQ x = VectorQ::Zero(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x(pivot_cols[i]) = b(static_cast<Eigen::Index>(i));
  return x;
}

inline Eigen::Index rank(MatrixQ a) {
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = detail::pick_pivot(a, r, c);
    if (p < 0) continue;
    a.row(p).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      Rational f = a(i, c) / a(r, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// Transpose of the cofactor matrix.
template <typename Scalar>
Matrix<Scalar> adjugate(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("adjugate: matrix is not square");
  Matrix<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Matrix<Scalar> minor(n - 1, n - 1);
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Scalar cof = determinant<Scalar>(std::move(minor));
      adj(j, i) = ((i + j) % 2 == 0) ? cof : Scalar(-cof);
    }
  }
  return adj;
}

}  // namespace hinv
