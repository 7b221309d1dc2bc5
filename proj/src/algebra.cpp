#include "hinv/algebra.hpp"

#include <stdexcept>
#include <string>

namespace hinv {

template <typename Scalar>
Matrix<Scalar> column_partial_sums(const BasicHMatrix<Scalar>& h) {
  const int n1 = h.size();
  Matrix<Scalar> cs = Matrix<Scalar>::Zero(n1, n1);
  for (int j = 1; j <= n1; ++j) {
    Scalar acc = 0;
    for (int i = j; i <= n1; ++i) {
      acc += h(i, j);
      cs(i - 1, j - 1) = acc;
    }
  }
  return cs;
}

template <typename Scalar>
Matrix<Scalar> p_table(const BasicHMatrix<Scalar>& h) {
  const int n1 = h.size();
  const Matrix<Scalar> cs = column_partial_sums(h);
  // sum_{i=a}^{b} h_{i,c}
  auto colsum = [&](int a, int b, int c) -> Scalar {
    if (b < a) return Scalar(0);
    Scalar s = cs(b - 1, c - 1);
    if (a > c) s -= cs(a - 2, c - 1);
    return s;
  };
  Matrix<Scalar> p = Matrix<Scalar>::Zero(n1 + 1, n1 + 1);
  for (int k = 0; k <= n1; ++k) p(k, 0) = 1;
  // P(k+1,m) = sum_{j=m-1}^{k} (sum_{i=j+1}^{k+1} h_{i,j+1}) P(j,m-1)
  for (int k = 0; k < n1; ++k)
    for (int m = 1; m <= k + 1; ++m) {
      Scalar acc = 0;
      for (int j = m - 1; j <= k; ++j) {
        if (is_zero(p(j, m - 1))) continue;
        acc += colsum(j + 1, k + 1, j + 1) * p(j, m - 1);
      }
      p(k + 1, m) = acc;
    }
  return p;
}

template <typename Scalar>
Scalar p_invariant(const BasicHMatrix<Scalar>& h, int k, int m) {
  if (k < 1 || k > h.size() || m < 0 || m > k)
    throw std::invalid_argument("p_invariant: (k,m) = (" + std::to_string(k) + "," +
                                std::to_string(m) + ") out of range");
  return p_table(h.leading(k))(k, m);
}

template <typename Scalar>
Matrix<Scalar> q_table(const BasicHMatrix<Scalar>& h, int k) {
  if (k < 1 || k > h.size()) throw std::invalid_argument("q_table: k out of range");
  const Matrix<Scalar> cs = column_partial_sums(h);
  Matrix<Scalar> q = Matrix<Scalar>::Zero(k, k);
  for (int j = 1; j <= k; ++j) q(0, j - 1) = cs(k - 1, j - 1);
  // Q(k,m+1,j) = sum_{l=j+1}^{k} (h_{j,j} + ... + h_{l-1,j}) Q(k,m,l)
  for (int m = 1; m < k; ++m)
    for (int j = 1; j + m <= k; ++j) {
      Scalar acc = 0;
      for (int l = j + 1; l <= k; ++l) acc += cs(l - 2, j - 1) * q(m - 1, l - 1);
      q(m, j - 1) = acc;
    }
  return q;
}

template <typename Scalar>
Scalar q_partial(const BasicHMatrix<Scalar>& h, int k, int m, int j) {
  if (k < 1 || k > h.size() || m < 1 || m > k || j < 1 || j > k)
    throw std::invalid_argument("q_partial: index out of range");
  if (j > k - m + 1) return Scalar(0);
  return q_table(h, k)(m - 1, j - 1);
}

template <typename Scalar>
Vector<Scalar> d_values(const BasicHMatrix<Scalar>& h) {
  const int n = h.n();
  Vector<Scalar> d(n);
  d(0) = 1;
  // D(k+1) = D(k) - sum_{j=1}^{k} h_{k,j} D(j)
  for (int k = 1; k < n; ++k) {
    Scalar acc = d(k - 1);
    for (int j = 1; j <= k; ++j) acc -= h(k, j) * d(j - 1);
    d(k) = acc;
  }
  return d;
}

template <typename Scalar>
Scalar d_value(const BasicHMatrix<Scalar>& h, int k) {
  if (k < 1 || k > h.n()) throw std::invalid_argument("d_value: k out of range");
  return d_values(h)(k - 1);
}

template <typename Scalar>
BasicHMatrix<Scalar> h_dual(const BasicHMatrix<Scalar>& h) {
  const int n = h.n();
  BasicHMatrix<Scalar> out(h.size());
  for (int k = 1; k <= h.size(); ++k)
    for (int j = 1; j <= k; ++j) out.set(k, j, h(n - j, n - k));
  return out;
}

template <typename Scalar>
BasicQProfile<Scalar> q_profile(const BasicHMatrix<Scalar>& h) {
  const int n = h.n();
  BasicQProfile<Scalar> out(n);
  const Matrix<Scalar> q = q_table(h, h.size());
  for (int j = 1; j < n; ++j)
    for (int k = 1; k + j <= n; ++k) out.set(k, j, q(k - 1, j - 1));
  return out;
}

template <typename Scalar>
BasicHMatrix<Scalar> h_from_q_profile(const BasicQProfile<Scalar>& q) {
  const int n = q.n();
  const int n1 = n - 1;
  for (int j = 1; j <= n1; ++j)
    if (is_zero(q(n - j, j)))
      throw std::domain_error("h_from_q_profile: degenerate profile, Q(N-1," +
                              std::to_string(n - j) + "," + std::to_string(j) + ") = 0");
  BasicHMatrix<Scalar> h(n1);
  for (int k = 1; k <= n1; ++k) {
    if (k == n1) {
      h.set(k, k, q(1, n1));
      break;
    }
    h.set(k, k, q(n - k, k) / q(n - k - 1, k + 1));
    // running[m] = h_{k,k} + ... + h_{m,k}
    std::vector<Scalar> running(n1 + 1, Scalar(0));
    running[k] = h(k, k);
    for (int i = k + 1; i <= n1 - 1; ++i) {
      Scalar bracket = q(n - i, k);
      for (int l = k + 1; l <= i; ++l) bracket -= running[l - 1] * q(n - i - 1, l);
      Scalar v = bracket / q(n - i - 1, i + 1) - running[i - 1];
      h.set(i, k, v);
      running[i] = running[i - 1] + v;
    }
    h.set(n1, k, q(1, k) - running[n1 - 1]);
  }
  return h;
}

#define HINV_INSTANTIATE(S)                                                        \
  template Matrix<S> column_partial_sums(const BasicHMatrix<S>&);                  \
  template Matrix<S> p_table(const BasicHMatrix<S>&);                              \
  template S p_invariant(const BasicHMatrix<S>&, int, int);                        \
  template Matrix<S> q_table(const BasicHMatrix<S>&, int);                         \
  template S q_partial(const BasicHMatrix<S>&, int, int, int);                     \
  template Vector<S> d_values(const BasicHMatrix<S>&);                             \
  template S d_value(const BasicHMatrix<S>&, int);                                 \
  template BasicHMatrix<S> h_dual(const BasicHMatrix<S>&);                         \
  template BasicQProfile<S> q_profile(const BasicHMatrix<S>&);                     \
  template BasicHMatrix<S> h_from_q_profile(const BasicQProfile<S>&);

HINV_INSTANTIATE(Rational)
HINV_INSTANTIATE(double)

#undef HINV_INSTANTIATE

}  // namespace hinv
