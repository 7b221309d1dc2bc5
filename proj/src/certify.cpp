#include "hinv/certify.hpp"

#include "hinv/linalg.hpp"

namespace hinv {

Rational CertificateSet::min() const {
  Rational m = 0;
  bool first = true;
  for (int k = 2; k <= n_; ++k)
    for (int j = 1; j < k; ++j)
      if (first || lambda_(k - 1, j - 1) < m) m = lambda_(k - 1, j - 1), first = false;
  return m;
}

std::vector<std::pair<int, int>> CertificateSet::negative() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 2; k <= n_; ++k)
    for (int j = 1; j < k; ++j)
      if (lambda_(k - 1, j - 1) < 0) out.emplace_back(k, j);
  return out;
}

std::vector<std::pair<int, int>> CertificateSet::support() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 2; k <= n_; ++k)
    for (int j = 1; j < k; ++j)
      if (!is_zero(lambda_(k - 1, j - 1))) out.emplace_back(k, j);
  return out;
}

bool InvarianceReport::is_invariant() const {
  for (Eigen::Index i = 0; i < residuals.size(); ++i)
    if (!is_zero(residuals(i))) return false;
  return true;
}

Rational InvarianceReport::max_abs() const {
  Rational m = 0;
  for (Eigen::Index i = 0; i < residuals.size(); ++i) m = std::max(m, Rational(abs(residuals(i))));
  return m;
}

InvarianceReport invariance_report(const HMatrix& h) {
  const int n = h.n();
  InvarianceReport r;
  r.n = n;
  r.residuals = VectorQ::Zero(n - 1);
  if (n == 1) return r;
  const MatrixQ p = p_table(h);
  for (int m = 1; m <= n - 1; ++m)
    r.residuals(m - 1) = p(n - 1, m) - binomial_q(n, m + 1) / n;
  return r;
}

MatrixQ s_coefficients(const HMatrix& h, const CertificateSet& lambda) {
  const int n = h.n();
  if (lambda.n() != n) throw std::invalid_argument("s_coefficients: dimension mismatch");
  auto hh = [&](int i, int j) { return h(i, j); };
  auto lam = [&](int k, int j) { return lambda(k, j); };
  MatrixQ s = MatrixQ::Zero(n, n);

  Rational snn = n - 1;
  for (int j = 1; j < n; ++j) snn -= lam(n, j);
  s(n - 1, n - 1) = snn;

  // prefix[i] = lambda_{N,1} + ... + lambda_{N,i}
  std::vector<Rational> prefix(n, Rational(0));
  for (int i = 1; i < n; ++i) prefix[i] = prefix[i - 1] + lam(n, i);
  for (int j = 1; j < n; ++j) {
    Rational acc = lam(n, j);
    for (int i = j; i <= n - 1; ++i) acc -= hh(i, j) * (prefix[i] + 1);
    s(n - 1, j - 1) = 2 * acc;
  }

  for (int k = 1; k <= n - 1; ++k) {
    Rational acc = 0;
    Rational run = 0;  // h_{k,k} + ... + h_{i-1,k}
    for (int i = k + 1; i <= n; ++i) {
      run += hh(i - 1, k);
      acc += (2 * run - 1) * lam(i, k);
    }
    for (int j = 1; j < k; ++j) acc -= lam(k, j);
    s(k - 1, k - 1) = acc;

    std::vector<Rational> rowpre(k, Rational(0));
    for (int i = 1; i < k; ++i) rowpre[i] = rowpre[i - 1] + lam(k, i);
    for (int j = 1; j < k; ++j) {
      Rational v = lam(k, j);
      for (int nn = j; nn <= k - 1; ++nn) v -= hh(nn, j) * rowpre[nn];
      Rational c = 0;
      Rational sj = 0, sk = 0;  // sums of h_{n,j}, h_{n,k} for n = k..m-1
      for (int m = k + 1; m <= n; ++m) {
        sj += hh(m - 1, j);
        sk += hh(m - 1, k);
        c += sj * lam(m, k) + sk * lam(m, j);
      }
      s(k - 1, j - 1) = 2 * (v + c);
    }
  }
  return s;
}

namespace {

void require_invariant(const HMatrix& h) {
  InvarianceReport r = invariance_report(h);
  if (!r.is_invariant()) throw InvarianceViolatedError(std::move(r));
}

}  // namespace

CertificateSet certificates(const HMatrix& h) {
  const int n = h.n();
  CertificateSet out(n);
  if (n == 1) return out;
  require_invariant(h);
  const MatrixQ q = q_table(h, n - 1);  // Q(N-1,m,j) at (m-1,j-1)
  auto Q = [&](int m, int j) -> const Rational& { return q(m - 1, j - 1); };

  for (int j = 1; j < n; ++j) {
    Rational acc = 0;
    for (int m = 1; m <= n - j; ++m) acc += (m % 2 == 1) ? Q(m, j) : Rational(-Q(m, j));
    out.set(n, j, n * acc);
  }
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j) {
      Rational acc = 0;
      for (int l = 1; l <= n - j; ++l) {
        if (is_zero(Q(l, j))) continue;
        for (int m = 1; m <= n - k; ++m) {
          Rational t = binomial_q(l + m, m) * Q(l, j) * Q(m, k);
          if ((l + m - 1) % 2 == 0)
            acc += t;
          else
            acc -= t;
        }
      }
      out.set(k, j, n * acc);
    }
  return out;
}

MatrixQ coefficient_matrix_mn(const HMatrix& h) {
  const int n1 = h.size();
  const MatrixQ cs = column_partial_sums(h);
  MatrixQ m(n1, n1);
  for (int j = 1; j <= n1; ++j)
    for (int i = 1; i <= n1; ++i) {
      int lo = std::max(i, j);
      // sum_{k=lo}^{N-1} h_{k,j}
      Rational tail = cs(n1 - 1, j - 1);
      if (lo > j) tail -= cs(lo - 2, j - 1);
      m(j - 1, i - 1) = (i == j ? Rational(1) : Rational(0)) - tail;
    }
  return m;
}

MatrixQ partial_system_matrix(const HMatrix& h, int k) {
  if (k < 2 || k > h.size()) throw std::invalid_argument("partial_system_matrix: k out of range");
  MatrixQ a = MatrixQ::Zero(k - 1, k - 1);
  for (int i = 1; i < k; ++i) a(0, i - 1) = 1;
  for (int j = 2; j < k; ++j)
    for (int i = 1; i < k; ++i) {
      Rational t = 0;
      for (int nn = std::max(i, j); nn <= k - 1; ++nn) t += h(nn, j);
      a(j - 1, i - 1) = (i == j ? Rational(1) : Rational(0)) - t;
    }
  return a;
}

CertificateSet solve_lambda_by_elimination(const HMatrix& h) {
  const int n = h.n();
  CertificateSet out(n);
  if (n == 1) return out;
  require_invariant(h);

  // Row N: M_N a = rhs with rhs_j = sum_{i=j}^{N-1} h_{i,j}.
  const MatrixQ cs = column_partial_sums(h);
  VectorQ rhs(n - 1);
  for (int j = 1; j < n; ++j) rhs(j - 1) = cs(n - 2, j - 1);
  VectorQ a;
  try {
    a = solve<Rational>(coefficient_matrix_mn(h), rhs);
  } catch (const std::domain_error&) {
    throw std::logic_error("solve_lambda_by_elimination: singular row-N system under invariance");
  }
  for (int j = 1; j < n; ++j) out.set(n, j, a(j - 1));

  for (int k = n - 1; k >= 2; --k) {
    VectorQ b(k - 1);
    Rational first = 0;
    Rational run = 0;
    for (int i = k + 1; i <= n; ++i) {
      run += h(i - 1, k);
      first += (2 * run - 1) * out(i, k);
    }
    b(0) = first;
    for (int j = 2; j < k; ++j) {
      Rational c = 0, sj = 0, sk = 0;
      for (int m = k + 1; m <= n; ++m) {
        sj += h(m - 1, j);
        sk += h(m - 1, k);
        c += sj * out(m, k) + sk * out(m, j);
      }
      b(j - 1) = -c;
    }
    VectorQ x;
    try {
      x = solve<Rational>(partial_system_matrix(h, k), b);
    } catch (const std::domain_error&) {
      throw std::logic_error("solve_lambda_by_elimination: singular row-" + std::to_string(k) +
                             " system");
    }
    for (int j = 1; j < k; ++j) out.set(k, j, x(j - 1));
  }

  // The dropped equations (s_{k,1} and s_{1,1}) must hold as well.
  const MatrixQ s = s_coefficients(h, out);
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j)
      if (!is_zero(s(k - 1, j - 1)))
        throw std::logic_error("solve_lambda_by_elimination: inconsistent system at s(" +
                               std::to_string(k) + "," + std::to_string(j) + ")");
  return out;
}

Verdict certify(const HMatrix& h) {
  if (h.size() == 0) return Optimal{CertificateSet(1)};
  InvarianceReport r = invariance_report(h);
  if (!r.is_invariant()) return InvarianceViolated{std::move(r)};
  CertificateSet lam = certificates(h);
  auto neg = lam.negative();
  if (neg.empty()) return Optimal{std::move(lam)};
  return CertificateViolated{std::move(lam), std::move(neg)};
}

VectorQ necessity_triangular_solve(int n) {
  if (n < 2) throw std::invalid_argument("necessity_triangular_solve: n must be at least 2");
  VectorQ p = VectorQ::Zero(n);
  const Rational target = Rational(1) / n;
  for (int j = n; j >= 1; --j) {
    // the m = j-1 coefficient is C(j-1,j-1) = 1
    Rational acc = target;
    for (int m = j; m <= n - 1; ++m) {
      Rational t = binomial_q(m, j - 1) * p(m);
      if ((m + j - 1) % 2 == 0)
        acc -= t;
      else
        acc += t;
    }
    p(j - 1) = acc;
  }
  return p;
}

const char* status_name(const Verdict& v) {
  switch (v.index()) {
    case 0: return "optimal";
    case 1: return "invariance_violated";
    default: return "certificate_violated";
  }
}

}  // namespace hinv
