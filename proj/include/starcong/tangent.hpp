#pragma once

#include <vector>

#include "starcong/pattern.hpp"
#include "starcong/types.hpp"

namespace starcong {

// C^{m x n} as R^{2mn}: [Re vec(C); Im vec(C)], vec column-major.
RealVector realify(const Matrix& c);
Matrix unrealify(const RealVector& v, Eigen::Index rows, Eigen::Index cols);

/// Dense matrix of a real-linear (not complex-linear) map between realified
/// complex matrix spaces.
struct RealLinearOperator {
  RealMatrix matrix;

  Eigen::Index dim_in() const { return matrix.cols(); }
  Eigen::Index dim_out() const { return matrix.rows(); }
};

/// Phi_A: C |-> C^* A + A C, the first-order motion of A inside its
/// *congruence orbit.
RealLinearOperator phi_map(const Matrix& a);

/// Pair map (S, R) |-> (S^* M + N R, R^* N + M S) on
/// C^{m x n} (+) C^{n x m}, realified as [realify(S); realify(R)].
RealLinearOperator pair_phi_map(const Matrix& m_mat, const Matrix& n_mat);

/// Psi_A: X |-> X A + A X^*. Its kernel dimension is the orbit codimension.
RealLinearOperator star_commutant_map(const Matrix& a);

struct RankResult {
  int rank = 0;
  RealMatrix image_basis;   // dim_out x rank, orthonormal
  RealMatrix kernel_basis;  // dim_in x (dim_in - rank), orthonormal
  double sigma_min_kept = 0.0;
  double sigma_max_dropped = 0.0;
};

/// Rank by singular-value thresholding at tol * sigma_max.
RankResult numerical_rank(const RealLinearOperator& op, double tol);

struct DecompositionReport {
  int n = 0;
  int tangent_rank = 0;
  int pattern_params = 0;
  int combined_rank = 0;
  bool passed = false;
  double tolerance = 0.0;
  double sigma_min_kept = 0.0;     // from the tangent-operator SVD
  double sigma_max_dropped = 0.0;
};

// One realified generator column of the pattern space: E_ij or i*E_ij.
struct PatternGenerator {
  int i = 0;
  int j = 0;
  bool imaginary = false;
};

/// Generators in row-major position order; a Star yields the real unit then
/// the imaginary one.
std::vector<PatternGenerator> pattern_generators(const Pattern& p);
RealMatrix generator_columns(const Pattern& p, Eigen::Index n);

/// Certificate that realified C^{n x n} = image(Phi_a) (+) pattern space:
/// stacks an orthonormal image basis next to the pattern generators and
/// checks combined rank 2n^2 together with exact rank additivity.
DecompositionReport verify_direct_sum(const Matrix& a, const Pattern& p, double tol);

/// Real dimension of {X : X a + a X^* = 0}.
int codim_via_kernel(const Matrix& a, double tol);

}  // namespace starcong
