// Cyclic worst-case linear operator, the Gram matrix of its trajectory, and the
// perturbation that turns a negative certificate into a rate-violation witness.
#pragma once

#include <utility>
#include <vector>

#include "hinv/certify.hpp"

namespace hinv {

struct WorstCaseOperator {
  int n = 0;
  MatrixQ g;  // T = I - 2G
};

struct TraceLedger {
  int n = 0;
  MatrixQ a;  // Tr(G A_{i,j}) at (i-1, j-1), j < i
  VectorQ b;  // Tr(G B_i) at i-1

  // True when every trace is zero except a strictly positive one at `pair` (if given).
  bool only_positive_at(std::pair<int, int> pair) const;
  bool all_zero() const;
};

struct GramWitness {
  int n = 0;
  MatrixQ gram;
  Rational epsilon;
  MatrixQ direction;
  std::pair<int, int> violated_pair;
  Rational residual_sq;
  Rational bound_sq() const { return Rational(4, n * n); }
};

struct WitnessCheck {
  bool positive_definite = false;
  bool corner_one = false;
  bool ledger = false;
  bool residual_exceeds = false;
  bool ok() const { return positive_definite && corner_one && ledger && residual_exceeds; }
};

// Symbolic interpolation matrices on the basis g_i = e_i, y_0 = e_{N+1}.
struct InterpolationBasis {
  int n = 0;
  std::vector<VectorQ> x;  // x_1..x_N at 0..N-1
  std::vector<VectorQ> g;  // g_1..g_N
  MatrixQ a(int i, int j) const;
  MatrixQ b(int i) const;
  MatrixQ c() const;
  MatrixQ d() const;
  MatrixQ e() const;
};

WorstCaseOperator worst_operator(int n);

// v_j = sum_{m=j-1}^{N-1} (-1)^{m+j-1} C(m,j-1) P(N-1,m); ||G y_{N-1}||^2 = (r_sq/N) ||v||^2.
VectorQ terminal_gy(const HMatrix& h, const Rational& r_sq);

Rational worst_case_residual_sq(const HMatrix& h, const Rational& r_sq);

MatrixQ gram_g0(const HMatrix& h);

InterpolationBasis interpolation_basis(const HMatrix& h);

TraceLedger interpolation_traces(const MatrixQ& gram, const HMatrix& h);

bool adjugate_spotcheck(const HMatrix& h);

MatrixQ build_perturbation(const HMatrix& h, int i0, int j0);

GramWitness suboptimality_witness(const HMatrix& h, int i0, int j0);

WitnessCheck check_witness(const GramWitness& w, const HMatrix& h);

// Rows g_1..g_N, y_0 - y_star of a float Cholesky factor of the witness Gram matrix.
std::vector<std::vector<double>> witness_vectors(const GramWitness& w);

}  // namespace hinv
