#include "starcong/reduce.hpp"

#include <cmath>
#include <limits>

#include "starcong/construct.hpp"
#include "starcong/tangent.hpp"

namespace starcong {

double off_pattern_norm(const Matrix& r, const Pattern& p) {
  double acc = 0.0;
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      if (p.at(i, j) == PatternEntry::Zero) acc += std::norm(r(i, j));
    }
  }
  return std::sqrt(acc);
}

double pattern_distance(const Matrix& r, const Pattern& p) {
  double acc = 0.0;
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      switch (p.at(i, j)) {
        case PatternEntry::Zero: acc += std::norm(r(i, j)); break;
        case PatternEntry::Circle: acc += r(i, j).imag() * r(i, j).imag(); break;
        case PatternEntry::Bullet: acc += r(i, j).real() * r(i, j).real(); break;
        case PatternEntry::Star: break;
      }
    }
  }
  return std::sqrt(acc);
}

Matrix pattern_restriction(const Matrix& r, const Pattern& p) {
  Matrix out = Matrix::Zero(p.rows, p.cols);
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      if (p.at(i, j) != PatternEntry::Zero) out(i, j) = r(i, j);
    }
  }
  return out;
}

namespace {

double condition_number(const Matrix& s) {
  Eigen::JacobiSVD<Matrix> svd(s);
  const auto& sv = svd.singularValues();
  const double smin = sv[sv.size() - 1];
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv[0] / smin;
}

}  // namespace

ReductionResult reduce_perturbation(const CanonicalSpec& spec, const Matrix& e,
                                    double tol, int max_iter) {
  const Matrix a = assemble_canonical(spec);
  if (e.rows() != a.rows() || e.cols() != a.cols()) {
    throw RejectedInput("reduce: perturbation size must match the canonical matrix");
  }
  require_finite_entries(e, "reduce");
  if (!(tol > 0)) throw RejectedInput("reduce: tol must be positive");
  if (max_iter < 0) throw RejectedInput("reduce: max_iter must be >= 0");

  const Pattern p = assemble_pattern(spec);
  const DirectSumSolver solver(a, p, kDefaultRankTol);
  const Eigen::Index n = a.rows();

  Matrix s = Matrix::Identity(n, n);
  Matrix current = a + e;
  int iter = 0;
  double dist = pattern_distance(current - a, p);

  while (dist > tol && iter < max_iter) {
    const ProjectionResult pr = solver.project(current - a);
    const Matrix step = Matrix::Identity(n, n) - pr.c;
    const Matrix next_s = s * step;
    const Matrix next = step.adjoint() * current * step;
    const double next_dist = pattern_distance(next - a, p);
    if (!std::isfinite(next_dist)) break;  // diverged; keep the last finite state
    s = next_s;
    current = next;
    ++iter;
    if (condition_number(s) > 1e12) {
      throw DegeneracyError("reduce: transformation became numerically singular");
    }
    dist = next_dist;
  }

  ReductionResult out;
  out.s = s;
  out.d = pattern_restriction(current - a, p);
  out.iterations = iter;
  out.off_pattern_residual = off_pattern_norm(current - a, p);
  out.converged = dist <= tol;
  return out;
}

}  // namespace starcong
