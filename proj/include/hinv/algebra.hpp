// Invariant polynomials P, Q, D of an H-matrix, the H-dual, and the Q-profile bijection.
// Templates are instantiated for Rational and double in algebra.cpp.
#pragma once

#include "hinv/hmatrix.hpp"

namespace hinv {

// Table of Q(N-1,k,j) for j = 1..N-1, k = 1..N-j; entries with k + j > N read as zero.
template <typename Scalar>
class BasicQProfile {
 public:
  BasicQProfile() = default;
  explicit BasicQProfile(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("QProfile: horizon must be at least 2");
    q_ = Matrix<Scalar>::Zero(n - 1, n - 1);
  }

  int n() const { return n_; }

  Scalar operator()(int k, int j) const {
    check(k, j);
    return k + j > n_ ? Scalar(0) : q_(k - 1, j - 1);
  }

  void set(int k, int j, const Scalar& v) {
    check(k, j);
    if (k + j > n_) throw std::out_of_range("QProfile::set: k + j exceeds N");
    q_(k - 1, j - 1) = v;
  }

  friend bool operator==(const BasicQProfile& a, const BasicQProfile& b) {
    return a.n_ == b.n_ && a.q_ == b.q_;
  }

 private:
  void check(int k, int j) const {
    if (k < 1 || j < 1 || k > n_ - 1 || j > n_ - 1)
      throw std::out_of_range("QProfile: index (" + std::to_string(k) + "," + std::to_string(j) +
                              ") out of range");
  }

  int n_ = 0;
  Matrix<Scalar> q_;
};

using QProfile = BasicQProfile<Rational>;

// P(k,m) for 0 <= m <= k <= N-1, stored at (k,m); zero above the diagonal.
template <typename Scalar>
Matrix<Scalar> p_table(const BasicHMatrix<Scalar>& h);

template <typename Scalar>
Scalar p_invariant(const BasicHMatrix<Scalar>& h, int k, int m);

// Q(k,m,j) at (m-1, j-1) for 1 <= m, j <= k.
template <typename Scalar>
Matrix<Scalar> q_table(const BasicHMatrix<Scalar>& h, int k);

template <typename Scalar>
Scalar q_partial(const BasicHMatrix<Scalar>& h, int k, int m, int j);

// D(1..N) at positions 0..N-1.
template <typename Scalar>
Vector<Scalar> d_values(const BasicHMatrix<Scalar>& h);

template <typename Scalar>
Scalar d_value(const BasicHMatrix<Scalar>& h, int k);

// Anti-diagonal transpose: (k,j) <- (N-j, N-k).
template <typename Scalar>
BasicHMatrix<Scalar> h_dual(const BasicHMatrix<Scalar>& h);

template <typename Scalar>
BasicQProfile<Scalar> q_profile(const BasicHMatrix<Scalar>& h);

// Inverse of q_profile on profiles with nonzero anti-diagonal Q(N-1,N-j,j).
template <typename Scalar>
BasicHMatrix<Scalar> h_from_q_profile(const BasicQProfile<Scalar>& q);

// Cumulative column sums: entry (i-1, j-1) = h_{j,j} + ... + h_{i,j} for i >= j.
template <typename Scalar>
Matrix<Scalar> column_partial_sums(const BasicHMatrix<Scalar>& h);

}  // namespace hinv
