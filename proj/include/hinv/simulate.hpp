// Float runs of H-matrix iterations against nonexpansive operator oracles.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hinv/hmatrix.hpp"

namespace hinv {

struct OperatorOracle {
  int dimension = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> evaluate;
  std::string description;
};

struct Trajectory {
  std::vector<Eigen::VectorXd> points;  // y_0..y_{N-1}
  std::vector<double> residuals_sq;     // ||y_k - T y_k||^2
  std::vector<double> bound_sq;         // 4 R^2 / (k+1)^2
  std::vector<std::string> warnings;    // nonexpansiveness spot-check failures
  int oracle_calls = 0;
};

struct AnytimeRow {
  int k = 0;
  double residual_sq = 0;
  double bound_sq = 0;
  bool ok = false;
};

// Bound column uses R^2 = ||y0||^2, i.e. a fixed point at the origin.
Trajectory run(const HMatrix& h, const OperatorOracle& oracle, const Eigen::VectorXd& y0);
Trajectory run(const HMatrix& h, const OperatorOracle& oracle, const Eigen::VectorXd& y0, double r_sq);

// Largest singular value estimate by power iteration on M^T M.
double operator_norm_estimate(const Eigen::MatrixXd& m, int steps = 200);

OperatorOracle linear_oracle(const Eigen::MatrixXd& m, std::string description = "matrix");
OperatorOracle worstcase_oracle(int n);
OperatorOracle rotation_oracle(double theta);

// -(R/sqrt(N)) (1,...,1)
Eigen::VectorXd worstcase_y0(int n, double r = 1.0);

std::vector<AnytimeRow> anytime_check(const HMatrix& h, const OperatorOracle& oracle,
                                      const Eigen::VectorXd& y0, double r_sq);

// y_k = sum_m (-1)^m P(k,m;2H) G^m y0 for T = I - 2G, k = 0..N-1.
std::vector<Eigen::VectorXd> polynomial_iterates(const HMatrix& h, const Eigen::MatrixXd& g,
                                                 const Eigen::VectorXd& y0);

std::string trajectory_csv(const Trajectory& t);

}  // namespace hinv
