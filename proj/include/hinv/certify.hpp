// Invariance residuals, the s(H,lambda) coefficient system, closed-form certificates
// and the optimality verdict.
#pragma once

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "hinv/algebra.hpp"

namespace hinv {

// lambda_{k,j} for 1 <= j < k <= N.
class CertificateSet {
 public:
  CertificateSet() = default;
  explicit CertificateSet(int n) : n_(n), lambda_(MatrixQ::Zero(n, n)) {}

  int n() const { return n_; }
  Rational operator()(int k, int j) const {
    check(k, j);
    return lambda_(k - 1, j - 1);
  }
  void set(int k, int j, const Rational& v) {
    check(k, j);
    lambda_(k - 1, j - 1) = v;
  }

  Rational min() const;
  // Pairs with lambda < 0 in lexicographic (k,j) order.
  std::vector<std::pair<int, int>> negative() const;
  // Pairs with lambda != 0 in lexicographic order.
  std::vector<std::pair<int, int>> support() const;

  friend bool operator==(const CertificateSet& a, const CertificateSet& b) {
    return a.n_ == b.n_ && a.lambda_ == b.lambda_;
  }

 private:
  void check(int k, int j) const {
    if (j < 1 || k <= j || k > n_)
      throw std::out_of_range("CertificateSet: index (" + std::to_string(k) + "," +
                              std::to_string(j) + ") out of range");
  }

  int n_ = 0;
  MatrixQ lambda_;
};

struct InvarianceReport {
  int n = 0;
  // residuals(m-1) = P(N-1,m) - C(N,m+1)/N for m = 1..N-1
  VectorQ residuals;

  bool is_invariant() const;
  Rational residual(int m) const { return residuals(m - 1); }
  Rational max_abs() const;
};

class InvarianceViolatedError : public std::domain_error {
 public:
  explicit InvarianceViolatedError(InvarianceReport report)
      : std::domain_error("invariance violated"), report_(std::move(report)) {}
  const InvarianceReport& report() const { return report_; }

 private:
  InvarianceReport report_;
};

struct Optimal {
  CertificateSet certificates;
};
struct InvarianceViolated {
  InvarianceReport report;
};
struct CertificateViolated {
  CertificateSet certificates;
  std::vector<std::pair<int, int>> negative;
};
using Verdict = std::variant<Optimal, InvarianceViolated, CertificateViolated>;

InvarianceReport invariance_report(const HMatrix& h);

// Lower-triangular s(k-1, j-1) for 1 <= j <= k <= N.
MatrixQ s_coefficients(const HMatrix& h, const CertificateSet& lambda);

// Closed forms; throws InvarianceViolatedError on non-invariant input.
CertificateSet certificates(const HMatrix& h);

// Backward-in-k sequence of exact partial solves; throws on non-invariant input.
CertificateSet solve_lambda_by_elimination(const HMatrix& h);

// Coefficient matrix of the row-N partial system: (j,i) -> delta_ij - sum_{k=max(i,j)}^{N-1} h_{k,j}.
MatrixQ coefficient_matrix_mn(const HMatrix& h);

// Coefficient matrix of the row-k partial system (k <= N-1) used by the backward solve:
// first row the s_{k,k} equation, then s_{k,j} for j = 2..k-1.
MatrixQ partial_system_matrix(const HMatrix& h, int k);

Verdict certify(const HMatrix& h);

// P(N-1,m), m = 0..N-1, from the triangular necessity system solved in the order j = N..1.
VectorQ necessity_triangular_solve(int n);

inline bool is_optimal(const Verdict& v) { return std::holds_alternative<Optimal>(v); }
const char* status_name(const Verdict& v);

}  // namespace hinv
