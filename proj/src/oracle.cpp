#include "hinv/oracle.hpp"

#include <array>
#include <functional>

#include "hinv/linalg.hpp"

namespace hinv::oracle {

namespace {

// Adds prod h_{i(r),j(r)} over tuples with j(1) fixed when first_j > 0.
Rational tuple_sum(const HMatrix& h, int k, int m, int first_j) {
  Rational total = 0;
  std::function<void(int, int, Rational)> rec = [&](int lo, int left, Rational acc) {
    if (left == 0) {
      total += acc;
      return;
    }
    for (int j = lo; j <= k; ++j) {
      if (first_j > 0 && left == m && j != first_j) continue;
      for (int i = j; i <= k; ++i) {
        Rational hij = h(i, j);
        if (is_zero(hij)) continue;
        rec(i + 1, left - 1, acc * hij);
      }
    }
  };
  rec(1, m, Rational(1));
  return total;
}

}  // namespace

Rational p_enumerate(const HMatrix& h, int k, int m) {
  if (m == 0) return 1;
  return tuple_sum(h, k, m, 0);
}

Rational q_enumerate(const HMatrix& h, int k, int m, int j) { return tuple_sum(h, k, m, j); }

MatrixQ identity_coefficients(const HMatrix& h, const CertificateSet& lambda) {
  const int n = h.n();
  // coordinates of x_k - y_0 in the basis g_1..g_N
  std::vector<VectorQ> x(n + 1, VectorQ::Zero(n));
  for (int k = 1; k <= n; ++k) {
    x[k](k - 1) -= 1;
    for (int i = 1; i <= k - 1; ++i)
      for (int j = 1; j <= i; ++j) x[k](j - 1) -= 2 * h(i, j);
  }
  auto e = [&](int i) {
    VectorQ v = VectorQ::Zero(n);
    v(i - 1) = 1;
    return v;
  };
  // bilinear form: sum M_ab <g_a, g_b>
  MatrixQ m = MatrixQ::Zero(n, n);
  m(n - 1, n - 1) += n;
  m += e(n) * x[n].transpose();
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j) {
      if (is_zero(lambda(k, j))) continue;
      m += lambda(k, j) * ((e(k) - e(j)) * (x[k] - x[j]).transpose());
    }
  MatrixQ s = MatrixQ::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    s(k - 1, k - 1) = m(k - 1, k - 1);
    for (int j = 1; j < k; ++j) s(k - 1, j - 1) = m(k - 1, j - 1) + m(j - 1, k - 1);
  }
  return s;
}

std::optional<CertificateSet> lambda_dense_solve(const HMatrix& h) {
  const int n = h.n();
  std::vector<std::pair<int, int>> vars;
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j) vars.emplace_back(k, j);
  const Eigen::Index eqs = n * (n + 1) / 2;
  auto flat = [&](const MatrixQ& s) {
    VectorQ v(eqs);
    Eigen::Index r = 0;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= k; ++j) v(r++) = s(k - 1, j - 1);
    return v;
  };
  const VectorQ base = flat(identity_coefficients(h, CertificateSet(n)));
  MatrixQ a(eqs, static_cast<Eigen::Index>(vars.size()));
  for (std::size_t c = 0; c < vars.size(); ++c) {
    CertificateSet unit(n);
    unit.set(vars[c].first, vars[c].second, 1);
    a.col(static_cast<Eigen::Index>(c)) = flat(identity_coefficients(h, unit)) - base;
  }
  if (rank(a) != static_cast<Eigen::Index>(vars.size())) return std::nullopt;
  auto sol = solve_consistent(a, -base);
  if (!sol) return std::nullopt;
  CertificateSet out(n);
  for (std::size_t c = 0; c < vars.size(); ++c) out.set(vars[c].first, vars[c].second, (*sol)(c));
  return out;
}

std::optional<std::string> check_chu_vandermonde(int limit) {
  for (int a = -limit; a <= limit; ++a)
    for (int b = -limit; b <= limit; ++b)
      for (int c = 0; c <= limit; ++c) {
        Integer lhs = 0;
        for (int i = 0; i <= c; ++i) lhs += binomial(a, i) * binomial(b, c - i);
        if (lhs != binomial(a + b, c))
          return "chu-vandermonde a=" + std::to_string(a) + " b=" + std::to_string(b) +
                 " c=" + std::to_string(c);
      }
  return std::nullopt;
}

std::optional<std::string> check_hockey_stick(int limit) {
  for (int p = 0; p <= limit; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r) {
        Integer lhs = 0;
        for (int j = r; j <= p - q; ++j) lhs += binomial(p - j, q) * binomial(j, r);
        if (lhs != binomial(p + 1, q + r + 1))
          return "hockey-stick p=" + std::to_string(p) + " q=" + std::to_string(q) +
                 " r=" + std::to_string(r);
      }
  return std::nullopt;
}

std::optional<std::string> check_summations(int limit) {
  for (int p = 0; p <= limit; ++p)
    for (int q = 0; q <= p; ++q) {
      const std::string tag = " p=" + std::to_string(p) + " q=" + std::to_string(q);
      for (int s = q; s <= p; ++s) {
        Integer lhs = 0;
        for (int i = s; i <= p; ++i) lhs += binomial(i, q);
        if (lhs != binomial(p + 1, q + 1) - binomial(s, q + 1))
          return "summation (a)" + tag + " s=" + std::to_string(s);
      }
      if (p >= q + 1)
        for (int s = 1; s <= p - q; ++s) {
          Integer head = 0, tail = 0;
          for (int j = 1; j <= s; ++j) head += j * binomial(p - j, q);
          for (int j = s + 1; j <= p - q; ++j) tail += j * binomial(p - j, q);
          if (head != binomial(p + 1, q + 2) - s * binomial(p - s, q + 1) - binomial(p - s + 1, q + 2))
            return "summation (b) head" + tag + " s=" + std::to_string(s);
          if (tail != s * binomial(p - s, q + 1) + binomial(p - s + 1, q + 2))
            return "summation (b) tail" + tag + " s=" + std::to_string(s);
        }
      Integer lhs = 0;
      for (int i = q; i <= p; ++i) lhs += (i + 1) * binomial(i, q);
      if (lhs != (q + 1) * binomial(p + 2, q + 2)) return "summation (c)" + tag;
    }
  return std::nullopt;
}

Rational random_pool_rational(Rng& rng) {
  static const std::array<std::pair<int, int>, 12> pool{{{-2, 1}, {-1, 1}, {-1, 2}, {-1, 3}, {0, 1},
                                                         {1, 4}, {1, 3}, {1, 2}, {2, 3}, {1, 1},
                                                         {3, 2}, {2, 1}}};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto [p, q] = pool[pick(rng)];
  return Rational(p, q);
}

HMatrix random_hmatrix(Rng& rng, int size) {
  HMatrix h(size);
  for (int k = 1; k <= size; ++k)
    for (int j = 1; j <= k; ++j) h.set(k, j, random_pool_rational(rng));
  return h;
}

QProfile random_invariant_profile(Rng& rng, int n) {
  if (n < 2) throw std::invalid_argument("random_invariant_profile: n must be at least 2");
  for (;;) {
    QProfile q(n);
    bool ok = true;
    for (int m = 1; m <= n - 1 && ok; ++m) {
      Rational slack = binomial_q(n, m + 1) / n;
      for (int j = 1; j < n - m; ++j) {
        Rational v = random_pool_rational(rng);
        q.set(m, j, v);
        slack -= v;
      }
      q.set(m, n - m, slack);
      ok = !is_zero(slack);
    }
    if (ok) return q;
  }
}

HMatrix random_invariant_hmatrix(Rng& rng, int n) {
  return h_from_q_profile(random_invariant_profile(rng, n));
}

}  // namespace hinv::oracle
