#include <gtest/gtest.h>

#include <set>

#include "hinv/catalog.hpp"
#include "hinv/certify.hpp"
#include "hinv/linalg.hpp"

using namespace hinv;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

using Support = std::vector<std::pair<int, int>>;

Support sorted(std::set<std::pair<int, int>> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(Generators, Ohm) {
  const HMatrix h = ohm(4);
  EXPECT_EQ(h(1, 1), R(1, 2));
  EXPECT_EQ(h(2, 1), R(-1, 6));
  EXPECT_EQ(h(3, 3), R(3, 4));
  EXPECT_EQ(h(3, 1), R(-1, 12));
  EXPECT_THROW(ohm(0), std::invalid_argument);
}

TEST(Generators, DualOhm) {
  EXPECT_EQ(dual_ohm(2), ohm(2));
  const HMatrix d = dual_ohm(4);
  EXPECT_EQ(d(1, 1), R(3, 4));
  EXPECT_EQ(d(2, 1), R(-1, 6));
  EXPECT_EQ(d(2, 2), R(2, 3));
  EXPECT_EQ(d(3, 1), R(-1, 12));
  EXPECT_EQ(d(3, 2), R(-1, 6));
  EXPECT_EQ(d(3, 3), R(1, 2));
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(dual_ohm(n), h_dual(ohm(n)));
}

TEST(Generators, SelfDualMixed) {
  const HMatrix h = self_dual_mixed(4, 2);
  EXPECT_EQ(h(2, 2), 1);
  EXPECT_EQ(h(2, 1), R(-1, 4));
  EXPECT_EQ(h(3, 2), R(-1, 4));
  for (int n = 4; n <= 12; n += 2) EXPECT_EQ(h_dual(self_dual_mixed(n, n / 2)), self_dual_mixed(n, n / 2));
  EXPECT_THROW(self_dual_mixed(4, 3), std::invalid_argument);
  EXPECT_THROW(self_dual_mixed(4, 1), std::invalid_argument);

  const QProfile q = q_profile(self_dual_mixed(6, 3));
  for (int k = 1; k <= 3; ++k)
    EXPECT_EQ(q(k, 3), Rational(3 * 4, 6 * (k + 1)) * binomial_q(2, k - 1));
}

TEST(Generators, SecondMixed) {
  const HMatrix h = second_mixed(4, 2);
  EXPECT_EQ(h(2, 1), R(-1, 8));
  EXPECT_EQ(h(3, 1), R(-1, 8));
  EXPECT_THROW(second_mixed(3, 2), std::invalid_argument);
}

TEST(Generators, SecondMixedDualIsDualOhmThenOhm) {
  for (int n = 4; n <= 10; ++n)
    for (int np = 2; np <= n - 2; ++np) {
      const HMatrix d = h_dual(second_mixed(n, np));
      EXPECT_EQ(d, anytime_extend(dual_ohm(n - np + 1), n - 1)) << n << "," << np;
      EXPECT_TRUE(is_ohm_tail(d, n - np + 1));
      EXPECT_FALSE(is_ohm_tail(d, 1));
    }
}

TEST(Generators, Strange3) {
  const HMatrix h = strange3();
  EXPECT_EQ(h(1, 1), R(3, 4));
  EXPECT_EQ(h(2, 1), R(-1, 4));
  EXPECT_EQ(h(2, 2), R(4, 7));
  EXPECT_EQ(h(3, 1), R(-1, 12));
  EXPECT_EQ(h(3, 2), R(-1, 14));
  EXPECT_EQ(h(3, 3), R(7, 12));
  EXPECT_TRUE(is_optimal(certify(h)));
  const Verdict d = certify(h_dual(h));
  ASSERT_TRUE(std::holds_alternative<CertificateViolated>(d));
  EXPECT_EQ(std::get<CertificateViolated>(d).certificates(4, 2), R(-3, 7));
}

TEST(Families, AllOptimal) {
  for (int n = 2; n <= 12; ++n) {
    EXPECT_TRUE(is_optimal(certify(ohm(n)))) << n;
    EXPECT_TRUE(is_optimal(certify(dual_ohm(n)))) << n;
    for (int np = 2; np <= n - 2; ++np) {
      EXPECT_TRUE(is_optimal(certify(self_dual_mixed(n, np)))) << n << "," << np;
      EXPECT_TRUE(is_optimal(certify(second_mixed(n, np)))) << n << "," << np;
    }
  }
}

TEST(Families, SparsitySupports) {
  for (int n = 3; n <= 10; ++n) {
    std::set<std::pair<int, int>> top, bottom;
    for (int j = 1; j < n; ++j) {
      top.insert({j + 1, j});
      bottom.insert({n, j});
    }
    EXPECT_EQ(certificates(ohm(n)).support(), sorted(top));
    EXPECT_EQ(certificates(dual_ohm(n)).support(), sorted(bottom));
    for (int np = 2; np <= n - 2; ++np) {
      std::set<std::pair<int, int>> sd, sm;
      for (int j = 1; j < n; ++j) {
        if (j < np) {
          sd.insert({j + 1, j});
          sm.insert({n, j});
        } else {
          sd.insert({n, j});
          sm.insert({j + 1, j});
        }
      }
      EXPECT_EQ(certificates(self_dual_mixed(n, np)).support(), sorted(sd)) << n << "," << np;
      EXPECT_EQ(certificates(second_mixed(n, np)).support(), sorted(sm)) << n << "," << np;
    }
  }
  EXPECT_EQ(certificates(strange3()).support(), (Support{{3, 1}, {4, 2}, {4, 3}}));
}

TEST(Families, ClosedFormCertificates) {
  for (int n = 4; n <= 12; ++n)
    for (int np = 2; np <= n - 2; ++np) {
      const CertificateSet sd = certificates(self_dual_mixed(n, np));
      EXPECT_EQ(sd(n, np), Rational(np, n - np));
      EXPECT_EQ(sd(np, np - 1), Rational(np * (np - 1), n));
      const CertificateSet sm = certificates(second_mixed(n, np));
      for (int j = np; j < n; ++j)
        EXPECT_EQ(sm(j + 1, j), Rational(n * (j - np + 2) * (j - np + 1), (n - np + 1) * (n - np + 1)))
            << n << "," << np << " j=" << j;
    }
}

TEST(Sparsity, ProfilesReproduceFamilies) {
  for (int n = 3; n <= 10; ++n) {
    const QProfile top = q_from_sparsity(SparsityChoice::uniform(n, Sparsity::Top));
    const QProfile bot = q_from_sparsity(SparsityChoice::uniform(n, Sparsity::Bottom));
    for (int j = 1; j < n; ++j)
      for (int k = 1; k + j <= n; ++k) {
        ASSERT_EQ(top(k, j), Rational(j, n) * binomial_q(n - j - 1, k - 1));
        ASSERT_EQ(bot(k, j), binomial_q(n - j - 1, k - 1) / (k + 1));
      }
    EXPECT_EQ(h_from_q_profile(top), ohm(n));
    EXPECT_EQ(h_from_q_profile(bot), dual_ohm(n));
    for (int np = 2; np <= n - 2; ++np) {
      EXPECT_EQ(h_from_q_profile(q_from_sparsity(SparsityChoice::top_then_bottom(n, np))),
                self_dual_mixed(n, np));
      EXPECT_EQ(h_from_q_profile(q_from_sparsity(SparsityChoice::bottom_then_top(n, np))),
                second_mixed(n, np));
    }
  }
  EXPECT_THROW(q_from_sparsity(SparsityChoice::uniform(2, Sparsity::Top)), std::invalid_argument);
}

TEST(Anytime, Extension) {
  HMatrix one(1);
  one.set(1, 1, R(1, 2));
  EXPECT_EQ(anytime_extend(one, 3), ohm(4));
  EXPECT_EQ(anytime_extend(ohm(3), 7), ohm(8));
  const HMatrix e = anytime_extend(strange3(), 7);
  for (int m = 3; m <= 7; ++m) EXPECT_TRUE(is_optimal(certify(e.leading(m)))) << m;
  EXPECT_THROW(anytime_extend(h_dual(strange3()), 5), std::domain_error);
  EXPECT_THROW(anytime_extend(ohm(4), 2), std::invalid_argument);
}

TEST(Anytime, OhmTail) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_TRUE(is_ohm_tail(ohm(n), 1));
    EXPECT_FALSE(is_ohm_tail(dual_ohm(n), 1));
  }
}
