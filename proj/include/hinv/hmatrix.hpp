// Lower-triangular step-coefficient matrix, 1-based like the iteration it encodes.
#pragma once

#include <stdexcept>
#include <string>

#include "hinv/rational.hpp"

namespace hinv {

template <typename Scalar>
class BasicHMatrix {
 public:
  using Dense = Matrix<Scalar>;

  BasicHMatrix() = default;

  // Zero matrix with `iterations` rows.
  explicit BasicHMatrix(int iterations) {
    if (iterations < 0) throw std::invalid_argument("HMatrix: negative dimension");
    m_ = Dense::Zero(iterations, iterations);
  }

  explicit BasicHMatrix(Dense m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("HMatrix: matrix is not square");
    for (Eigen::Index r = 0; r < m_.rows(); ++r)
      for (Eigen::Index c = r + 1; c < m_.cols(); ++c)
        if (!is_zero(m_(r, c)))
          throw std::invalid_argument("HMatrix: nonzero entry above the diagonal");
  }

  // Number of iterations N-1.
  int size() const { return static_cast<int>(m_.rows()); }
  // Horizon N.
  int n() const { return size() + 1; }

  Scalar operator()(int k, int j) const {
    check(k, j);
    return j > k ? Scalar(0) : m_(k - 1, j - 1);
  }

  void set(int k, int j, const Scalar& v) {
    check(k, j);
    if (j > k) throw std::out_of_range("HMatrix::set: entry above the diagonal");
    m_(k - 1, j - 1) = v;
  }

  const Dense& dense() const { return m_; }

  // Leading rows 1..rows.
  BasicHMatrix leading(int rows) const {
    if (rows < 0 || rows > size()) throw std::out_of_range("HMatrix::leading: bad size");
    return BasicHMatrix(Dense(m_.topLeftCorner(rows, rows)));
  }

  template <typename To>
  BasicHMatrix<To> cast() const {
    Matrix<To> out(size(), size());
    for (int r = 0; r < size(); ++r)
      for (int c = 0; c < size(); ++c) out(r, c) = convert<To>(m_(r, c));
    return BasicHMatrix<To>(std::move(out));
  }

  friend bool operator==(const BasicHMatrix& a, const BasicHMatrix& b) {
    return a.size() == b.size() && a.m_ == b.m_;
  }
  friend bool operator!=(const BasicHMatrix& a, const BasicHMatrix& b) { return !(a == b); }

 private:
  template <typename To, typename From>
  static To convert(const From& x) {
    if constexpr (std::is_same_v<From, Rational> && std::is_floating_point_v<To>)
      return x.template convert_to<To>();
    else
      return To(x);
  }

  void check(int k, int j) const {
    if (k < 1 || k > size() || j < 1 || j > size())
      throw std::out_of_range("HMatrix: index (" + std::to_string(k) + "," + std::to_string(j) +
                              ") outside 1.." + std::to_string(size()));
  }

  Dense m_;
};

using HMatrix = BasicHMatrix<Rational>;
using HMatrixD = BasicHMatrix<double>;

}  // namespace hinv
