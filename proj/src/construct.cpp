#include "starcong/construct.hpp"

#include <cmath>

namespace starcong {

GreedyResult greedy_miniversal(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) throw RejectedInput("greedy_miniversal: matrix must be square");
  require_finite_entries(a, "greedy_miniversal");
  if (!(tol > 0)) throw RejectedInput("greedy_miniversal: tol must be positive");

  const Eigen::Index n = a.rows();
  const Eigen::Index nn = n * n;
  const Eigen::Index full = 2 * nn;

  const RankResult tangent = numerical_rank(phi_map(a), tol);

  RealMatrix basis(full, full);
  Eigen::Index nb = tangent.rank;
  basis.leftCols(nb) = tangent.image_basis;

  GreedyResult out;
  out.tangent_rank = tangent.rank;

  // Candidates are elementary vectors (unit norm), so the independence
  // threshold is just tol. Re-orthogonalize once against drift.
  auto try_keep = [&](Eigen::Index coord) {
    RealVector w = RealVector::Unit(full, coord);
    w -= basis.leftCols(nb) * (basis.leftCols(nb).transpose() * w);
    w -= basis.leftCols(nb) * (basis.leftCols(nb).transpose() * w);
    const double norm = w.norm();
    if (norm <= tol) return false;
    basis.col(nb++) = w / norm;
    return true;
  };

  // Row-major scan, all real units before all imaginary ones.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (try_keep(j * n + i)) out.kept_real.emplace_back(i, j);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (try_keep(nn + j * n + i)) out.kept_imag.emplace_back(i, j);
    }
  }

  out.pattern = Pattern::zeros(static_cast<int>(n), static_cast<int>(n));
  for (auto [i, j] : out.kept_real) out.pattern.at(i, j) = PatternEntry::Circle;
  for (auto [i, j] : out.kept_imag) {
    auto& cell = out.pattern.at(i, j);
    cell = cell == PatternEntry::Circle ? PatternEntry::Star : PatternEntry::Bullet;
  }
  return out;
}

DirectSumSolver::DirectSumSolver(const Matrix& a, const Pattern& p, double tol)
    : a_(a), p_(p), n_(a.rows()) {
  report_ = verify_direct_sum(a, p, tol);  // validates shapes too
  if (!report_.passed) {
    throw RejectedInput("projection: the tangent/pattern direct-sum certificate failed");
  }
  const Eigen::Index full = 2 * n_ * n_;
  rank_ = report_.tangent_rank;
  gens_ = pattern_generators(p);

  phi_svd_.compute(phi_map(a).matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
  image_basis_ = phi_svd_.matrixU().leftCols(rank_);

  RealMatrix combined(full, full);
  combined.leftCols(rank_) = image_basis_;
  combined.rightCols(static_cast<Eigen::Index>(gens_.size())) =
      generator_columns(p, n_);
  lu_.compute(combined);
  if (lu_.rcond() < 1e-14) {
    throw DegeneracyError("projection: combined system is numerically singular");
  }
}

ProjectionResult DirectSumSolver::project(const Matrix& target) const {
  if (target.rows() != n_ || target.cols() != n_) {
    throw RejectedInput("project: target size must match the base matrix");
  }
  const RealVector y = lu_.solve(realify(target));

  // Minimum-norm preimage of the tangent component through the stored SVD.
  const RealVector t = image_basis_ * y.head(rank_);
  const RealVector coeffs =
      ((phi_svd_.matrixU().leftCols(rank_).transpose() * t).array() /
       phi_svd_.singularValues().head(rank_).array())
          .matrix();
  const Matrix c = unrealify(phi_svd_.matrixV().leftCols(rank_) * coeffs, n_, n_);

  Matrix d = Matrix::Zero(n_, n_);
  for (size_t k = 0; k < gens_.size(); ++k) {
    const double coeff = y[rank_ + static_cast<Eigen::Index>(k)];
    d(gens_[k].i, gens_[k].j) += gens_[k].imaginary ? Complex(0, coeff) : Complex(coeff, 0);
  }

  ProjectionResult out;
  out.residual = (c.adjoint() * a_ + a_ * c + d - target).norm();
  out.c = c;
  out.d = d;
  return out;
}

ProjectionResult project_decompose(const Matrix& a, const Pattern& p,
                                   const Matrix& m_target, double tol) {
  DirectSumSolver solver(a, p, tol);
  return solver.project(m_target);
}

std::vector<Complex> solve_star_system(Complex lambda, const std::vector<Complex>& c) {
  if (!is_finite(lambda)) throw RejectedInput("star system: lambda must be finite");
  const double mod = std::abs(lambda);
  if (std::abs(mod - 1.0) <= kUnitModulusTol) {
    throw RejectedInput("star system: |lambda| = 1 makes the system singular");
  }
  const double denom = mod * mod - 1.0;
  if (std::abs(denom) < 1e-10) {
    throw DegeneracyError("star system: |lambda|^2 - 1 too small to divide by");
  }
  const size_t r = c.size();
  std::vector<Complex> x(r);
  // The closed form solves every index at once; pairing j with r-j+1 shows it
  // satisfies both halves of the system, including lambda = 0 where it
  // degenerates to x_j = conj(c_{r-j+1}).
  for (size_t j = 0; j < r; ++j) {
    if (!is_finite(c[j])) throw RejectedInput("star system: right-hand side must be finite");
    x[j] = (std::conj(lambda) * c[j] - std::conj(c[r - 1 - j])) / denom;
  }
  return x;
}

}  // namespace starcong
