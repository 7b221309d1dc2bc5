// Named optimal families and the sparse-certificate profile pipeline.
#pragma once

#include <vector>

#include "hinv/algebra.hpp"

namespace hinv {

enum class Sparsity { Top, Bottom };

// Top keeps lambda_{j+1,j} and zeroes lambda_{j+2..N,j}; Bottom keeps lambda_{N,j}
// and zeroes lambda_{j+1..N-1,j}.
struct SparsityChoice {
  int n = 0;
  std::vector<Sparsity> pattern;  // pattern[j-1] for j = 1..N-2

  static SparsityChoice uniform(int n, Sparsity s);
  // Top for j < split, Bottom for j >= split.
  static SparsityChoice top_then_bottom(int n, int split);
  static SparsityChoice bottom_then_top(int n, int split);
};

HMatrix ohm(int n);
HMatrix dual_ohm(int n);
HMatrix self_dual_mixed(int n, int n_prime);
HMatrix second_mixed(int n, int n_prime);
HMatrix strange3();

QProfile q_from_sparsity(const SparsityChoice& choice);

// Appends OHM-tail rows until the matrix has `target` rows; the prefix must certify optimal.
HMatrix anytime_extend(const HMatrix& h, int target);

bool is_ohm_tail(const HMatrix& h, int from_row);

}  // namespace hinv
