#include "hinv/worstcase.hpp"

#include <Eigen/Cholesky>
#include <cmath>

#include "hinv/linalg.hpp"

namespace hinv {

namespace {

MatrixQ sym_outer(const VectorQ& u, const VectorQ& v) {
  MatrixQ m = u * v.transpose();
  MatrixQ t = m.transpose();
  return ((m + t) / Rational(2)).eval();
}

Rational trace_product(const MatrixQ& x, const MatrixQ& y) { return x.cwiseProduct(y).sum(); }

}  // namespace

bool TraceLedger::only_positive_at(std::pair<int, int> pair) const {
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      const Rational& t = a(i - 1, j - 1);
      if (std::make_pair(i, j) == pair) {
        if (!(t > 0)) return false;
      } else if (!is_zero(t)) {
        return false;
      }
    }
  for (int i = 1; i <= n; ++i)
    if (!is_zero(b(i - 1))) return false;
  return true;
}

bool TraceLedger::all_zero() const { return only_positive_at({0, 0}); }

MatrixQ InterpolationBasis::a(int i, int j) const {
  return sym_outer(x[i - 1] - x[j - 1], g[i - 1] - g[j - 1]);
}

MatrixQ InterpolationBasis::b(int i) const { return sym_outer(x[i - 1], g[i - 1]); }

MatrixQ InterpolationBasis::c() const {
  MatrixQ m = MatrixQ::Zero(n + 1, n + 1);
  m(n, n) = 1;
  return m;
}

MatrixQ InterpolationBasis::d() const {
  MatrixQ m = MatrixQ::Zero(n + 1, n + 1);
  m(n - 1, n - 1) = 1;
  m(n - 1, n) = m(n, n - 1) = Rational(-1, n);
  return m;
}

MatrixQ InterpolationBasis::e() const {
  MatrixQ m = MatrixQ::Zero(n + 1, n + 1);
  m(n - 1, n - 1) = 1;
  return m;
}

WorstCaseOperator worst_operator(int n) {
  if (n < 2) throw std::invalid_argument("worst_operator: n must be at least 2");
  MatrixQ g = MatrixQ::Zero(n, n);
  const Rational half(1, 2);
  for (int i = 0; i < n; ++i) g(i, i) = half;
  for (int i = 1; i < n; ++i) g(i, i - 1) = -half;
  g(0, n - 1) = half;
  return {n, g};
}

VectorQ terminal_gy(const HMatrix& h, const Rational& r_sq) {
  if (!(r_sq > 0)) throw std::invalid_argument("terminal_gy: r_sq must be positive");
  const int n = h.n();
  const MatrixQ p = p_table(h);
  VectorQ v = VectorQ::Zero(n);
  for (int j = 1; j <= n; ++j) {
    Rational acc = 0;
    for (int m = j - 1; m <= n - 1; ++m) {
      Rational t = binomial_q(m, j - 1) * p(n - 1, m);
      if ((m + j - 1) % 2 == 0)
        acc += t;
      else
        acc -= t;
    }
    v(j - 1) = acc;
  }
  return v;
}

Rational worst_case_residual_sq(const HMatrix& h, const Rational& r_sq) {
  const VectorQ v = terminal_gy(h, r_sq);
  return 4 * (r_sq / h.n()) * v.squaredNorm();
}

MatrixQ gram_g0(const HMatrix& h) {
  const int n = h.n();
  const MatrixQ p = p_table(h);
  MatrixQ g(n + 1, n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Rational acc = 0;
      for (int m = 0; m <= i - 1; ++m) {
        if (is_zero(p(i - 1, m))) continue;
        for (int k = 0; k <= j - 1; ++k) {
          Rational t = binomial_q(m + k, m) * p(i - 1, m) * p(j - 1, k);
          if ((m + k) % 2 == 0)
            acc += t;
          else
            acc -= t;
        }
      }
      g(i - 1, j - 1) = g(j - 1, i - 1) = acc / n;
    }
  for (int i = 0; i < n; ++i) g(i, n) = g(n, i) = Rational(1, n);
  g(n, n) = 1;
  return g;
}

InterpolationBasis interpolation_basis(const HMatrix& h) {
  const int n = h.n();
  InterpolationBasis basis;
  basis.n = n;
  VectorQ y = VectorQ::Zero(n + 1);
  y(n) = 1;
  for (int i = 1; i <= n; ++i) {
    VectorQ gi = VectorQ::Zero(n + 1);
    gi(i - 1) = 1;
    basis.g.push_back(gi);
    basis.x.push_back(y - gi);  // x_i = y_{i-1} - g_i
    if (i <= n - 1)
      for (int j = 1; j <= i; ++j) y(j - 1) -= 2 * h(i, j);
  }
  return basis;
}

TraceLedger interpolation_traces(const MatrixQ& gram, const HMatrix& h) {
  const int n = h.n();
  if (gram.rows() != n + 1 || gram.cols() != n + 1)
    throw std::invalid_argument("interpolation_traces: gram dimension must be N+1");
  const InterpolationBasis basis = interpolation_basis(h);
  TraceLedger out;
  out.n = n;
  out.a = MatrixQ::Zero(n, n);
  out.b = VectorQ::Zero(n);
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) out.a(i - 1, j - 1) = trace_product(gram, basis.a(i, j));
  for (int i = 1; i <= n; ++i) out.b(i - 1) = trace_product(gram, basis.b(i));
  return out;
}

bool adjugate_spotcheck(const HMatrix& h) {
  if (!invariance_report(h).is_invariant())
    throw std::domain_error("adjugate_spotcheck: requires an invariant H-matrix");
  const int n = h.n();
  const MatrixQ adj = adjugate<Rational>(gram_g0(h));
  const MatrixQ p = p_table(h);
  Rational prod = 1;
  for (int i = 1; i <= n - 1; ++i) prod *= p(i, i) * p(i, i);
  const Rational nn(n);
  const Rational corner = prod / pow(nn, n - 2);
  const Rational off = -prod / pow(nn, n - 1);
  for (int r = 1; r <= n + 1; ++r)
    for (int c = 1; c <= n + 1; ++c) {
      const Rational& v = adj(r - 1, c - 1);
      if (r >= n && c >= n) {
        if (r == n && c == n && v != corner) return false;
        if (r != c && v != off) return false;
      } else if (!is_zero(v)) {
        return false;
      }
    }
  return true;
}

namespace {

VectorQ flatten(const MatrixQ& m) { return Eigen::Map<const VectorQ>(m.data(), m.size()); }

// v minus its orthogonal projection onto span(columns of u).
VectorQ reject(const MatrixQ& u, const VectorQ& v) {
  const MatrixQ k = u.transpose() * u;
  const VectorQ rhs = u.transpose() * v;
  auto coeff = solve_consistent(k, rhs);
  if (!coeff) throw std::logic_error("build_perturbation: inconsistent normal equations");
  return v - u * (*coeff);
}

}  // namespace

MatrixQ build_perturbation(const HMatrix& h, int i0, int j0) {
  const int n = h.n();
  if (j0 < 1 || i0 <= j0 || i0 > n) throw std::invalid_argument("build_perturbation: bad pair");
  const CertificateSet lam = certificates(h);
  if (!(lam(i0, j0) < 0)) throw std::domain_error("build_perturbation: no violation at this pair");

  const InterpolationBasis basis = interpolation_basis(h);
  std::vector<MatrixQ> u;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (std::make_pair(i, j) != std::make_pair(i0, j0)) u.push_back(basis.a(i, j));
  for (int i = 1; i <= n; ++i) u.push_back(basis.b(i));
  u.push_back(basis.c());

  const Eigen::Index dim = (n + 1) * (n + 1);
  const Eigen::Index p = static_cast<Eigen::Index>(u.size());
  MatrixQ v1(dim, p + 1), v2(dim, p + 1);
  for (Eigen::Index c = 0; c < p; ++c) v1.col(c) = v2.col(c) = flatten(u[c]);
  const VectorQ dn = flatten(basis.d()), en = flatten(basis.e());
  v1.col(p) = dn;
  v2.col(p) = en;

  // w = proj_{V2 perp}(D) + proj_{V1 perp}(E)
  VectorQ w = reject(v2, dn) + reject(v1, en);
  MatrixQ delta = Eigen::Map<MatrixQ>(w.data(), n + 1, n + 1);

  const TraceLedger ledger = interpolation_traces(delta, h);
  if (!ledger.only_positive_at({i0, j0}) || !is_zero(delta(n, n)) ||
      !(trace_product(delta, basis.d()) > 0) || !(trace_product(delta, basis.e()) > 0))
    throw std::logic_error("build_perturbation: constructed direction fails the trace conditions");
  return delta;
}

GramWitness suboptimality_witness(const HMatrix& h, int i0, int j0) {
  const int n = h.n();
  const MatrixQ delta = build_perturbation(h, i0, j0);
  const MatrixQ g0 = gram_g0(h);
  Rational eps = 1;
  for (int iter = 0; iter < 4096; ++iter, eps /= 2) {
    MatrixQ g = g0 + eps * delta;
    bool pd = true;
    for (int k = 1; k <= n + 1 && pd; ++k)
      pd = determinant<Rational>(g.topLeftCorner(k, k)) > 0;
    if (!pd) continue;
    GramWitness w;
    w.n = n;
    w.residual_sq = 4 * g(n - 1, n - 1);
    w.gram = std::move(g);
    w.epsilon = eps;
    w.direction = delta;
    w.violated_pair = {i0, j0};
    return w;
  }
  throw std::logic_error("suboptimality_witness: epsilon halving did not terminate");
}

WitnessCheck check_witness(const GramWitness& w, const HMatrix& h) {
  WitnessCheck c;
  const int n = w.n;
  if (h.n() != n || w.gram.rows() != n + 1) return c;
  c.positive_definite = true;
  for (Rational m : leading_minors<Rational>(w.gram)) c.positive_definite = c.positive_definite && m > 0;
  c.corner_one = w.gram(n, n) == 1 && w.gram == w.gram.transpose();
  c.ledger = interpolation_traces(w.gram, h).only_positive_at(w.violated_pair);
  c.residual_exceeds = w.residual_sq == 4 * w.gram(n - 1, n - 1) && w.residual_sq > w.bound_sq();
  return c;
}

std::vector<std::vector<double>> witness_vectors(const GramWitness& w) {
  const Eigen::Index d = w.gram.rows();
  Eigen::MatrixXd g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = to_double(w.gram(i, j));
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) throw std::runtime_error("witness_vectors: Cholesky failed");
  const Eigen::MatrixXd l = llt.matrixL();
  const double err = (l * l.transpose() - g).cwiseAbs().maxCoeff();
  if (err > 1e-10 * std::max(1.0, g.cwiseAbs().maxCoeff()))
    throw std::runtime_error("witness_vectors: Gram reconstruction error above tolerance");
  std::vector<std::vector<double>> out;
  for (Eigen::Index i = 0; i < d; ++i) {
    std::vector<double> row(d);
    for (Eigen::Index j = 0; j < d; ++j) row[j] = l(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace hinv
