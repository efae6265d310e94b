#pragma once

#include <cstdint>
#include <utility>

#include "starcong/canonical.hpp"
#include "starcong/types.hpp"

namespace starcong {

/// SplitMix64-based source; identical seeds give identical streams on every
/// run, which the suite's byte-identical-report contract relies on.
struct RandomSource {
  std::uint64_t state;

  explicit RandomSource(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64();
  std::uint64_t below(std::uint64_t bound);  // [0, bound)
  double uniform();                          // [0, 1)
  double gaussian();                         // Box-Muller
  Complex gaussian_complex();
};

/// Per-trial seed so campaign results do not depend on execution order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter);

/// Deterministic random canonical spec (total dimension <= max_n, up to 3
/// blocks, |lambda| in [1.2, 4], mu uniform on the unit circle) plus a
/// Gaussian perturbation scaled to e_norm (e_norm < 0 means
/// 1e-3 * ||A_can||_F).
std::pair<CanonicalSpec, Matrix> random_case(std::uint64_t seed, int max_n,
                                             double e_norm = -1.0);

/// Random nonsingular complex n x n matrix with condition number <= max_cond
/// (unitary factors from QR, log-uniform singular values).
Matrix random_conditioned(RandomSource& rng, int n, double max_cond);

}  // namespace starcong
