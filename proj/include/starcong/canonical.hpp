#pragma once

#include <vector>

#include "starcong/types.hpp"

namespace starcong {

enum class BlockKind { H, Delta, Jordan };

/// One direct summand of a *congruence canonical form:
///   H_m(lambda) = [[0, I_m], [J_m(lambda), 0]]  with |lambda| > 1 (2m x 2m),
///   mu * Delta_n                                with |mu| = 1,
///   J_k(0).
struct CanonicalBlock {
  BlockKind kind = BlockKind::Jordan;
  int size = 1;     // m for H (total block 2m x 2m), n for Delta, k for Jordan
  Complex lambda;   // H only
  Complex mu;       // Delta only, exact unit modulus after ingestion

  static CanonicalBlock h(int m, Complex lambda);
  static CanonicalBlock delta(int n, Complex mu);
  static CanonicalBlock jordan(int k);

  int dim() const { return kind == BlockKind::H ? 2 * size : size; }
};

/// Ordered list of canonical blocks. Ingestion reorders the Jordan blocks
/// among themselves so their sizes are descending; other blocks keep their
/// given positions.
struct CanonicalSpec {
  std::vector<CanonicalBlock> blocks;

  static CanonicalSpec of(std::vector<CanonicalBlock> blocks);
  int total_dim() const;
};

struct HermitianPair {
  Matrix h;
  Matrix k;
};

/// J_n(lambda): lambda on the diagonal, ones on the superdiagonal.
Matrix jordan_matrix(int n, Complex lambda);

/// Delta_n: symmetric, 1 on the anti-diagonal, i just right of it.
Matrix delta_matrix(int n);

Matrix build_block(const CanonicalBlock& block);
Matrix assemble_canonical(const CanonicalSpec& spec);

/// Unique split a = h + i*k with h, k Hermitian.
HermitianPair hermitian_split(const Matrix& a);

/// Delta_n^{-*} Delta_n, computed by solving Delta_n^* X = Delta_n.
/// Unit upper triangular with 2i on the superdiagonal; similar to J_n(1).
/// The companion product Delta_n Delta_n^{-*} is its transpose.
Matrix delta_cocycle(int n);

}  // namespace starcong
