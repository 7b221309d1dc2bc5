// Exact scalar type and dense containers shared by every module.
#pragma once

#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace hinv {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

// Accepts "p", "p/q", optional sign and surrounding whitespace; result is canonical.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Exact C(n,k) for any integer n and k >= 0, zero for k < 0 and for 0 <= n < k.
Integer binomial(long n, long k);
Rational binomial_q(long n, long k);

Rational pow(const Rational& base, unsigned exponent);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

}  // namespace hinv
