#include "starcong/spec_grid.hpp"

#include <cmath>
#include <numbers>

namespace starcong {

const std::vector<Complex>& grid_lambdas() {
  static const std::vector<Complex> lambdas = {
      {2.0, 0.0}, {-2.0, 0.0}, {3.0, 0.0}, {1.5, 1.5}};
  return lambdas;
}

const std::vector<Complex>& grid_mus() {
  static const std::vector<Complex> mus = {
      {1.0, 0.0},
      {0.0, 1.0},
      {-1.0, 0.0},
      std::polar(1.0, std::numbers::pi / 4.0),
      {3.0 / 5.0, 4.0 / 5.0}};
  return mus;
}

namespace {

std::vector<CanonicalBlock> grid_atoms(int max_total_dim) {
  std::vector<CanonicalBlock> atoms;
  for (int m = 1; m <= 4; ++m) {
    if (2 * m > max_total_dim) break;
    for (Complex lambda : grid_lambdas()) atoms.push_back(CanonicalBlock::h(m, lambda));
  }
  for (int n = 1; n <= 4 && n <= max_total_dim; ++n) {
    for (Complex mu : grid_mus()) atoms.push_back(CanonicalBlock::delta(n, mu));
  }
  for (int k = 1; k <= 4 && k <= max_total_dim; ++k) {
    atoms.push_back(CanonicalBlock::jordan(k));
  }
  return atoms;
}

}  // namespace

std::vector<CanonicalSpec> enumerate_grid_specs(int max_total_dim, int max_blocks) {
  if (max_total_dim < 1) throw RejectedInput("enumerate_grid_specs: bound must be >= 1");
  const std::vector<CanonicalBlock> atoms = grid_atoms(max_total_dim);
  std::vector<CanonicalSpec> specs;
  std::vector<CanonicalBlock> combo;

  // Multisets as non-decreasing atom index tuples; permuted orders give
  // *congruent matrices and identical certificates.
  auto extend = [&](auto&& self, size_t start, int dim_left, int blocks_left) -> void {
    if (!combo.empty()) specs.push_back(CanonicalSpec::of(combo));
    if (blocks_left == 0) return;
    for (size_t i = start; i < atoms.size(); ++i) {
      if (atoms[i].dim() > dim_left) continue;
      combo.push_back(atoms[i]);
      self(self, i, dim_left - atoms[i].dim(), blocks_left - 1);
      combo.pop_back();
    }
  };
  extend(extend, 0, max_total_dim, max_blocks);
  return specs;
}

}  // namespace starcong
