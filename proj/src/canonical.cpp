#include "starcong/canonical.hpp"

#include <algorithm>
#include <cmath>

namespace starcong {

namespace {

void require_positive_size(int size) {
  if (size < 1) throw RejectedInput("canonical block: size must be >= 1");
}

}  // namespace

CanonicalBlock CanonicalBlock::h(int m, Complex lambda) {
  require_positive_size(m);
  if (!is_finite(lambda)) throw RejectedInput("H block: lambda must be finite");
  // Strict |lambda| > 1, no slack: the boundary belongs to the Delta family.
  if (!(std::abs(lambda) > 1.0)) throw RejectedInput("H block: |lambda| > 1 violated");
  CanonicalBlock b;
  b.kind = BlockKind::H;
  b.size = m;
  b.lambda = lambda;
  return b;
}

CanonicalBlock CanonicalBlock::delta(int n, Complex mu) {
  require_positive_size(n);
  if (!is_finite(mu)) throw RejectedInput("Delta block: mu must be finite");
  const double r = std::abs(mu);
  if (std::abs(r - 1.0) > kUnitModulusTol) {
    throw RejectedInput("Delta block: | |mu| - 1 | <= 1e-12 violated");
  }
  CanonicalBlock b;
  b.kind = BlockKind::Delta;
  b.size = n;
  b.mu = mu / r;  // exact unit modulus from here on
  return b;
}

CanonicalBlock CanonicalBlock::jordan(int k) {
  require_positive_size(k);
  CanonicalBlock b;
  b.kind = BlockKind::Jordan;
  b.size = k;
  return b;
}

CanonicalSpec CanonicalSpec::of(std::vector<CanonicalBlock> blocks) {
  if (blocks.empty()) throw RejectedInput("canonical spec: at least one block required");
  // Jordan sizes descending, written back into the Jordan slots; other blocks
  // keep their positions.
  std::vector<int> jordan_sizes;
  for (const auto& b : blocks) {
    if (b.kind == BlockKind::Jordan) jordan_sizes.push_back(b.size);
  }
  std::sort(jordan_sizes.rbegin(), jordan_sizes.rend());
  size_t next = 0;
  for (auto& b : blocks) {
    if (b.kind == BlockKind::Jordan) b.size = jordan_sizes[next++];
  }
  CanonicalSpec spec;
  spec.blocks = std::move(blocks);
  return spec;
}

int CanonicalSpec::total_dim() const {
  int n = 0;
  for (const auto& b : blocks) n += b.dim();
  return n;
}

Matrix jordan_matrix(int n, Complex lambda) {
  Matrix j = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    j(i, i) = lambda;
    if (i + 1 < n) j(i, i + 1) = Complex(1, 0);
  }
  return j;
}

Matrix delta_matrix(int n) {
  Matrix d = Matrix::Zero(n, n);
  for (int r = 1; r <= n; ++r) {
    d(r - 1, n - r) = Complex(1, 0);             // anti-diagonal
    if (r >= 2) d(r - 1, n + 1 - r) = Complex(0, 1);  // one step right of it
  }
  return d;
}

Matrix build_block(const CanonicalBlock& block) {
  switch (block.kind) {
    case BlockKind::Jordan:
      return jordan_matrix(block.size, Complex(0, 0));
    case BlockKind::Delta:
      return block.mu * delta_matrix(block.size);
    case BlockKind::H: {
      const int m = block.size;
      Matrix h = Matrix::Zero(2 * m, 2 * m);
      h.block(0, m, m, m) = Matrix::Identity(m, m);
      h.block(m, 0, m, m) = jordan_matrix(m, block.lambda);
      return h;
    }
  }
  throw RejectedInput("canonical block: unknown kind");
}

Matrix assemble_canonical(const CanonicalSpec& spec) {
  if (spec.blocks.empty()) throw RejectedInput("canonical spec: empty");
  std::vector<Matrix> parts;
  parts.reserve(spec.blocks.size());
  for (const auto& b : spec.blocks) parts.push_back(build_block(b));
  return direct_sum(parts);
}

HermitianPair hermitian_split(const Matrix& a) {
  if (a.rows() != a.cols()) throw RejectedInput("hermitian_split: matrix must be square");
  HermitianPair out;
  out.h = (a + a.adjoint()) / 2.0;
  out.k = (a - a.adjoint()) / Complex(0, 2);
  return out;
}

Matrix delta_cocycle(int n) {
  if (n < 1) throw RejectedInput("delta_cocycle: n must be >= 1");
  const Matrix d = delta_matrix(n);
  // Partial pivoting reduces Delta_n^* to a reversed unit bidiagonal, so the
  // solve fills exactly the upper triangle.
  return Matrix(d.adjoint()).partialPivLu().solve(d);
}

}  // namespace starcong
