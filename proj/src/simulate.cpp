#include "hinv/simulate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hinv/algebra.hpp"
#include "hinv/worstcase.hpp"

namespace hinv {

Trajectory run(const HMatrix& h, const OperatorOracle& oracle, const Eigen::VectorXd& y0,
               double r_sq) {
  if (oracle.dimension != y0.size()) throw std::invalid_argument("run: dimension mismatch");
  const Eigen::MatrixXd hd = h.cast<double>().dense();
  const int steps = h.size();
  Trajectory t;
  std::vector<Eigen::VectorXd> ty;
  std::vector<Eigen::VectorXd> r;  // y_j - T y_j
  auto call = [&](const Eigen::VectorXd& y) {
    Eigen::VectorXd v = oracle.evaluate(y);
    ++t.oracle_calls;
    if (v.size() != y.size()) throw std::invalid_argument("run: oracle changed the dimension");
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      double lhs = (v - ty[i]).norm(), rhs = (y - t.points[i]).norm();
      if (lhs > rhs * (1 + 1e-12) + 1e-300)
        t.warnings.push_back("nonexpansiveness violated between y_" + std::to_string(i) + " and y_" +
                             std::to_string(t.points.size()));
    }
    t.points.push_back(y);
    ty.push_back(v);
    r.push_back(y - v);
    t.residuals_sq.push_back(r.back().squaredNorm());
    t.bound_sq.push_back(4 * r_sq / std::pow(static_cast<double>(t.points.size()), 2));
  };
  call(y0);
  for (int k = 0; k < steps; ++k) {
    Eigen::VectorXd y = t.points.back();
    for (int j = 0; j <= k; ++j) y -= hd(k, j) * r[j];
    call(y);
  }
  return t;
}

Trajectory run(const HMatrix& h, const OperatorOracle& oracle, const Eigen::VectorXd& y0) {
  return run(h, oracle, y0, y0.squaredNorm());
}

double operator_norm_estimate(const Eigen::MatrixXd& m, int steps) {
  if (m.size() == 0) return 0;
  Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(m.cols(), 1.0, 2.0);
  double sigma = 0;
  for (int i = 0; i < steps; ++i) {
    Eigen::VectorXd w = m.transpose() * (m * v);
    double nw = w.norm();
    if (nw == 0) return 0;
    v = w / nw;
    double next = (m * v).norm();
    if (std::abs(next - sigma) <= 1e-12 * std::max(1.0, next)) return next;
    sigma = next;
  }
  return sigma;
}

OperatorOracle linear_oracle(const Eigen::MatrixXd& m, std::string description) {
  if (m.rows() != m.cols()) throw std::invalid_argument("linear_oracle: matrix is not square");
  const double norm = operator_norm_estimate(m);
  if (norm > 1 + 1e-12)
    throw std::domain_error("linear_oracle: not nonexpansive (norm estimate " + std::to_string(norm) + ")");
  return {static_cast<int>(m.rows()), [m](const Eigen::VectorXd& x) -> Eigen::VectorXd { return m * x; },
          std::move(description)};
}

OperatorOracle worstcase_oracle(int n) {
  const MatrixQ g = worst_operator(n).g;
  Eigen::MatrixXd t = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) -= 2 * to_double(g(i, j));
  return linear_oracle(t, "worstcase");
}

OperatorOracle rotation_oracle(double theta) {
  Eigen::MatrixXd m(2, 2);
  m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return linear_oracle(m, "rotation:" + std::to_string(theta));
}

Eigen::VectorXd worstcase_y0(int n, double r) {
  return Eigen::VectorXd::Constant(n, -r / std::sqrt(static_cast<double>(n)));
}

std::vector<AnytimeRow> anytime_check(const HMatrix& h, const OperatorOracle& oracle,
                                      const Eigen::VectorXd& y0, double r_sq) {
  const Trajectory t = run(h, oracle, y0, r_sq);
  std::vector<AnytimeRow> out;
  for (std::size_t k = 0; k < t.residuals_sq.size(); ++k) {
    AnytimeRow row{static_cast<int>(k), t.residuals_sq[k], t.bound_sq[k], false};
    row.ok = row.residual_sq <= row.bound_sq * (1 + 1e-9);
    out.push_back(row);
  }
  return out;
}

std::vector<Eigen::VectorXd> polynomial_iterates(const HMatrix& h, const Eigen::MatrixXd& g,
                                                 const Eigen::VectorXd& y0) {
  const MatrixQ p = p_table(h);
  std::vector<Eigen::VectorXd> powers{y0};
  for (int m = 1; m <= h.size(); ++m) powers.push_back(g * powers.back());
  std::vector<Eigen::VectorXd> out;
  for (int k = 0; k <= h.size(); ++k) {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(y0.size());
    for (int m = 0; m <= k; ++m) {
      // P(k,m;2H) = 2^m P(k,m;H)
      double c = std::ldexp(to_double(p(k, m)), m);
      y += (m % 2 == 0 ? c : -c) * powers[m];
    }
    out.push_back(y);
  }
  return out;
}

std::string trajectory_csv(const Trajectory& t) {
  std::ostringstream os;
  os.precision(17);
  os << "k,residual_sq,bound_sq,ratio\n";
  for (std::size_t k = 0; k < t.residuals_sq.size(); ++k) {
    double ratio = t.bound_sq[k] > 0 ? t.residuals_sq[k] / t.bound_sq[k] : 0.0;
    os << k << ',' << t.residuals_sq[k] << ',' << t.bound_sq[k] << ',' << ratio << '\n';
  }
  return os.str();
}

}  // namespace hinv
