#include "starcong/random_case.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace starcong {

std::uint64_t RandomSource::next_u64() {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
  return bound == 0 ? 0 : next_u64() % bound;
}

double RandomSource::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::gaussian() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex RandomSource::gaussian_complex() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
  RandomSource mix(base ^ (0xD1B54A32D192ED03ull * (counter + 1)));
  return mix.next_u64();
}

std::pair<CanonicalSpec, Matrix> random_case(std::uint64_t seed, int max_n, double e_norm) {
  if (max_n < 1) throw RejectedInput("random_case: max_n must be >= 1");
  RandomSource rng(seed);

  const int target_blocks = 1 + static_cast<int>(rng.below(3));
  std::vector<CanonicalBlock> blocks;
  int remaining = max_n;

  // Keep distinct continuous parameters separated: the deformation shape of a
  // block pair switches discretely at lambda = lambda' and mu = +-mu', so a
  // near-collision shrinks the convergence basin below the campaign's
  // perturbation size. Redraws stay uniform conditioned on separation.
  auto separated_lambda = [&] {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const double mod = 1.2 + rng.uniform() * (4.0 - 1.2);
      const Complex lambda = std::polar(mod, 2.0 * std::numbers::pi * rng.uniform());
      bool ok = true;
      for (const auto& b : blocks) {
        if (b.kind == BlockKind::H && std::abs(lambda - b.lambda) < 0.5) ok = false;
      }
      if (ok) return lambda;
    }
    throw DegeneracyError("random_case: could not separate lambda draws");
  };
  auto separated_mu = [&](int size) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Complex mu = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
      // an odd-size block's spoon shape switches at real mu
      if (size % 2 == 1 && std::abs(mu.imag()) < 0.2) continue;
      bool ok = true;
      for (const auto& b : blocks) {
        if (b.kind == BlockKind::Delta && std::abs(mu * mu - b.mu * b.mu) < 0.5) ok = false;
      }
      if (ok) return mu;
    }
    throw DegeneracyError("random_case: could not separate mu draws");
  };

  for (int b = 0; b < target_blocks && remaining >= 1; ++b) {
    const bool h_fits = remaining >= 2;
    const int kind_pick = static_cast<int>(rng.below(h_fits ? 3 : 2));
    if (h_fits && kind_pick == 2) {
      const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(remaining / 2)));
      blocks.push_back(CanonicalBlock::h(m, separated_lambda()));
      remaining -= 2 * m;
    } else if (kind_pick == 1) {
      const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(remaining)));
      blocks.push_back(CanonicalBlock::delta(n, separated_mu(n)));
      remaining -= n;
    } else {
      const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(remaining)));
      blocks.push_back(CanonicalBlock::jordan(k));
      remaining -= k;
    }
  }
  CanonicalSpec spec = CanonicalSpec::of(std::move(blocks));

  const Matrix a = assemble_canonical(spec);
  const Eigen::Index n = a.rows();
  Matrix e(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) e(i, j) = rng.gaussian_complex();
  }
  const double target = e_norm < 0 ? 1e-3 * a.norm() : e_norm;
  e *= target / e.norm();
  return {std::move(spec), std::move(e)};
}

Matrix random_conditioned(RandomSource& rng, int n, double max_cond) {
  if (n < 1) throw RejectedInput("random_conditioned: n must be >= 1");
  if (!(max_cond >= 1.0)) throw RejectedInput("random_conditioned: max_cond must be >= 1");
  auto random_unitary = [&] {
    Matrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) g(i, j) = rng.gaussian_complex();
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    return Matrix(qr.householderQ());
  };
  const Matrix q1 = random_unitary();
  const Matrix q2 = random_unitary();
  // Log-uniform singular values in [1/sqrt(max_cond), sqrt(max_cond)].
  const double half_log = 0.5 * std::log(max_cond);
  Matrix diag = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    diag(i, i) = std::exp((2.0 * rng.uniform() - 1.0) * half_log);
  }
  return q1 * diag * q2;
}

}  // namespace starcong
