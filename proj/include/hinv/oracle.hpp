// Independent slow reference computations and seeded random inputs.
// Used by the oracle-check command and by the test suites.
#pragma once

#include <optional>
#include <random>
#include <string>

#include "hinv/certify.hpp"

namespace hinv::oracle {

// Direct sums over chained index tuples 1 <= j(1) <= i(1) < j(2) <= ... <= i(m) <= k.
Rational p_enumerate(const HMatrix& h, int k, int m);
Rational q_enumerate(const HMatrix& h, int k, int m, int j);

// Coefficients of <g_k, g_j>, j <= k, after expanding
// N||g_N||^2 + <g_N, x_N - y_0> + sum lambda_{k,j} <x_k - x_j, g_k - g_j> in the g basis.
MatrixQ identity_coefficients(const HMatrix& h, const CertificateSet& lambda);

// Solves identity_coefficients(h, lambda) = 0 as one dense exact system.
// nullopt when inconsistent or not uniquely solvable.
std::optional<CertificateSet> lambda_dense_solve(const HMatrix& h);

// Each returns a description of the first failing parameter set, or nullopt.
std::optional<std::string> check_chu_vandermonde(int limit);
std::optional<std::string> check_hockey_stick(int limit);
std::optional<std::string> check_summations(int limit);

using Rng = std::mt19937_64;

// Entries drawn from a fixed small pool of rationals.
Rational random_pool_rational(Rng& rng);
HMatrix random_hmatrix(Rng& rng, int size);

// Random profile meeting the invariance sums; anti-diagonal entries absorb the slack.
// Retries internally until the anti-diagonal is nonzero.
QProfile random_invariant_profile(Rng& rng, int n);
HMatrix random_invariant_hmatrix(Rng& rng, int n);

}  // namespace hinv::oracle
