#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "starcong/pattern.hpp"
#include "starcong/tangent.hpp"
#include "starcong/types.hpp"

namespace starcong {

struct GreedyResult {
  Pattern pattern;
  std::vector<std::pair<int, int>> kept_real;  // 0-based positions
  std::vector<std::pair<int, int>> kept_imag;
  int tangent_rank = 0;
};

/// Basis extension: starting from an orthonormal basis of the tangent space,
/// scan all elementary matrices row-major (real units first, then imaginary
/// ones) and keep each candidate that is independent of everything kept so
/// far. Positions keeping both units become stars, real-only circles,
/// imaginary-only bullets. Deterministic for a fixed scan order.
GreedyResult greedy_miniversal(const Matrix& a, double tol);

struct ProjectionResult {
  Matrix c;         // transformation generator with Phi_a(c) = tangent part
  Matrix d;         // pattern-space component
  double residual;  // || Phi_a(c) + d - target ||_F
};

/// Frozen factorization of the split realified C^{n x n} =
/// image(Phi_a) (+) pattern space. Construction runs the direct-sum
/// certificate once; projections reuse the factors.
class DirectSumSolver {
 public:
  DirectSumSolver(const Matrix& a, const Pattern& p, double tol);

  const DecompositionReport& report() const { return report_; }
  const Matrix& base() const { return a_; }
  const Pattern& pattern() const { return p_; }

  /// Unique (c, d) with Phi_a(c) + d = target; c is the minimum-norm
  /// preimage of the tangent component.
  ProjectionResult project(const Matrix& target) const;

 private:
  Matrix a_;
  Pattern p_;
  Eigen::Index n_ = 0;
  int rank_ = 0;
  DecompositionReport report_;
  std::vector<PatternGenerator> gens_;
  RealMatrix image_basis_;
  Eigen::JacobiSVD<RealMatrix> phi_svd_;
  Eigen::PartialPivLU<RealMatrix> lu_;
};

/// One-shot wrapper around DirectSumSolver::project.
ProjectionResult project_decompose(const Matrix& a, const Pattern& p,
                                   const Matrix& m_target, double tol);

/// Solve lambda * x_j + conj(x_{r-j+1}) = c_j for j = 1..r, the skew-diagonal
/// system behind the H-block reduction. Requires |lambda| != 1; lambda = 0 is
/// fine. x_j = (conj(lambda) c_j - conj(c_{r-j+1})) / (|lambda|^2 - 1).
std::vector<Complex> solve_star_system(Complex lambda, const std::vector<Complex>& c);

}  // namespace starcong
