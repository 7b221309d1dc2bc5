#include "hinv/catalog.hpp"

#include "hinv/certify.hpp"

namespace hinv {

namespace {

Rational q(long p, long d) { return Rational(p, d); }

void require_horizon(int n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be at least 2");
}

void require_split(int n, int n_prime, const char* who) {
  if (n_prime < 2 || n_prime > n - 2)
    throw std::invalid_argument(std::string(who) + ": n_prime must satisfy 2 <= n_prime <= n-2");
}

}  // namespace

SparsityChoice SparsityChoice::uniform(int n, Sparsity s) {
  return SparsityChoice{n, std::vector<Sparsity>(std::max(n - 2, 0), s)};
}

SparsityChoice SparsityChoice::top_then_bottom(int n, int split) {
  SparsityChoice c{n, {}};
  for (int j = 1; j <= n - 2; ++j) c.pattern.push_back(j < split ? Sparsity::Top : Sparsity::Bottom);
  return c;
}

SparsityChoice SparsityChoice::bottom_then_top(int n, int split) {
  SparsityChoice c{n, {}};
  for (int j = 1; j <= n - 2; ++j) c.pattern.push_back(j < split ? Sparsity::Bottom : Sparsity::Top);
  return c;
}

HMatrix ohm(int n) {
  require_horizon(n, "ohm");
  HMatrix h(n - 1);
  for (int k = 1; k < n; ++k) {
    for (int j = 1; j < k; ++j) h.set(k, j, q(-j, k * (k + 1)));
    h.set(k, k, q(k, k + 1));
  }
  return h;
}

HMatrix dual_ohm(int n) {
  require_horizon(n, "dual_ohm");
  HMatrix h(n - 1);
  for (int k = 1; k < n; ++k) {
    for (int j = 1; j < k; ++j) h.set(k, j, q(-(n - k), (n - j) * (n - j + 1)));
    h.set(k, k, q(n - k, n - k + 1));
  }
  return h;
}

HMatrix self_dual_mixed(int n, int np) {
  require_split(n, np, "self_dual_mixed");
  HMatrix h(n - 1);
  for (int k = 1; k < np; ++k) {
    for (int j = 1; j < k; ++j) h.set(k, j, q(-j, k * (k + 1)));
    h.set(k, k, q(k, k + 1));
  }
  for (int j = 1; j < np; ++j) h.set(np, j, j * (q(1, n) - q(1, np)));
  h.set(np, np, q(np * (n - np), n));
  for (int k = np + 1; k < n; ++k) h.set(k, np, (n - k) * (q(1, n) - q(1, n - np)));
  for (int k = np + 1; k < n; ++k) {
    for (int j = np + 1; j < k; ++j) h.set(k, j, q(-(n - k), (n - j) * (n - j + 1)));
    h.set(k, k, q(n - k, n - k + 1));
  }
  return h;
}

HMatrix second_mixed(int n, int np) {
  require_split(n, np, "second_mixed");
  HMatrix h(n - 1);
  for (int k = 1; k < n; ++k)
    for (int j = 1; j <= k; ++j) {
      Rational v;
      if (k <= np - 1)
        v = (j == k) ? q(n - k, n - k + 1) : q(-(n - k), (n - j) * (n - j + 1));
      else if (j >= np)
        v = (j == k) ? q(k - np + 1, k - np + 2) : q(-(j - np + 1), (k - np + 1) * (k - np + 2));
      else
        v = q(-(n - np + 1), 2 * (n - j) * (n - j + 1));
      h.set(k, j, v);
    }
  return h;
}

HMatrix strange3() {
  HMatrix h(3);
  h.set(1, 1, q(3, 4));
  h.set(2, 1, q(-1, 4));
  h.set(2, 2, q(4, 7));
  h.set(3, 1, q(-1, 12));
  h.set(3, 2, q(-1, 14));
  h.set(3, 3, q(7, 12));
  return h;
}

QProfile q_from_sparsity(const SparsityChoice& choice) {
  const int n = choice.n;
  if (n < 3) throw std::invalid_argument("q_from_sparsity: n must be at least 3");
  if (static_cast<int>(choice.pattern.size()) != n - 2)
    throw std::invalid_argument("q_from_sparsity: pattern must cover j = 1..N-2");
  QProfile out(n);
  out.set(n - 1, 1, q(1, n));
  for (int j = 1; j <= n - 1; ++j) {
    const Rational anchor = out(n - j, j);
    if (is_zero(anchor))
      throw std::domain_error("q_from_sparsity: degenerate pattern, Q(N-1," + std::to_string(n - j) +
                              "," + std::to_string(j) + ") = 0");
    if (j <= n - 2) {
      const bool top = choice.pattern[j - 1] == Sparsity::Top;
      for (int k = 1; k <= n - j - 1; ++k) {
        Rational c = binomial_q(n - j - 1, k - 1);
        if (!top) c *= q(n - j + 1, k + 1);
        out.set(k, j, c * anchor);
      }
    }
    if (j + 1 <= n - 1) {
      const int m = n - j - 1;
      Rational v = binomial_q(n, n - j) / n;
      for (int i = 1; i <= j; ++i) v -= out(m, i);
      out.set(m, j + 1, v);
    }
  }
  return out;
}

HMatrix anytime_extend(const HMatrix& h, int target) {
  if (target <= h.size()) throw std::invalid_argument("anytime_extend: target must exceed current size");
  if (!is_optimal(certify(h))) throw std::domain_error("anytime_extend: prefix is not optimal");
  HMatrix out(target);
  for (int k = 1; k <= h.size(); ++k)
    for (int j = 1; j <= k; ++j) out.set(k, j, h(k, j));
  for (int r = h.size() + 1; r <= target; ++r) {
    for (int m = 1; m < r; ++m) {
      Rational s = 0;
      for (int i = m; i < r; ++i) s += out(i, m);
      out.set(r, m, -s / (r + 1));
    }
    out.set(r, r, q(r, r + 1));
  }
  return out;
}

bool is_ohm_tail(const HMatrix& h, int from_row) {
  if (from_row < 1) throw std::invalid_argument("is_ohm_tail: from_row must be positive");
  for (int r = from_row; r <= h.size(); ++r) {
    if (h(r, r) != q(r, r + 1)) return false;
    for (int m = 1; m < r; ++m) {
      Rational s = 0;
      for (int i = m; i < r; ++i) s += h(i, m);
      if (h(r, m) != -s / (r + 1)) return false;
    }
  }
  return true;
}

}  // namespace hinv
