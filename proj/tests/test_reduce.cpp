#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "starcong/reduce.hpp"
#include "test_helpers.hpp"

using namespace starcong;
using namespace starcong::testing;

namespace {

const Complex kI(0, 1);

Matrix scalar(Complex z) {
  Matrix m(1, 1);
  m << z;
  return m;
}

double class_violation(const Matrix& d, const Pattern& p) {
  double worst = 0.0;
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      if (p.at(i, j) == PatternEntry::Circle) worst = std::max(worst, std::abs(d(i, j).imag()));
      if (p.at(i, j) == PatternEntry::Bullet) worst = std::max(worst, std::abs(d(i, j).real()));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("full pattern absorbs the perturbation immediately") {
  const CanonicalSpec spec = CanonicalSpec::of({CanonicalBlock::jordan(1)});
  const Matrix e = scalar(Complex(3e-4, -2e-4));
  const ReductionResult r = reduce_perturbation(spec, e);
  CHECK(r.converged);
  CHECK(r.iterations == 0);
  CHECK(diff(r.s, Matrix::Identity(1, 1)) == 0.0);
  CHECK(diff(r.d, e) == 0.0);
}

TEST_CASE("zero perturbation is a fixed point") {
  const CanonicalSpec spec = CanonicalSpec::of({CanonicalBlock::h(1, 2)});
  const ReductionResult r = reduce_perturbation(spec, Matrix::Zero(2, 2));
  CHECK(r.converged);
  CHECK(r.iterations == 0);
  CHECK(r.d.norm() == 0.0);
  CHECK(r.off_pattern_residual == 0.0);
}

TEST_CASE("scalar delta case matches the analytic normal form") {
  const CanonicalSpec spec = CanonicalSpec::of({CanonicalBlock::delta(1, 1)});

  // s real positive, conj(s)(1+eps)s = 1 + i Im(eps)/(1+Re(eps))
  const Complex eps(3e-3, 4e-3);
  const ReductionResult r = reduce_perturbation(spec, scalar(eps), 1e-13, 25);
  CHECK(r.converged);
  const Complex expected = kI * (eps.imag() / (1.0 + eps.real()));
  CHECK(std::abs(r.d(0, 0) - expected) <= 1e-12);
  CHECK(std::abs(r.s(0, 0).imag()) <= 1e-12);
  CHECK(r.s(0, 0).real() > 0);

  // purely real eps normalizes to zero through a real scaling
  const double re = 5e-3;
  const ReductionResult rr = reduce_perturbation(spec, scalar(re), 1e-13, 25);
  CHECK(rr.converged);
  CHECK(std::abs(rr.d(0, 0)) <= 1e-12);
  CHECK(std::abs(std::norm(rr.s(0, 0)) - 1.0 / (1.0 + re)) <= 1e-12);
}

TEST_CASE("H block reduction converges and stays *congruent") {
  const CanonicalSpec spec = CanonicalSpec::of({CanonicalBlock::h(1, 2)});
  const Matrix a = assemble_canonical(spec);
  RandomSource rng(53);
  Matrix e = random_matrix(rng, 2, 2);
  e *= 1e-3 / e.norm();

  const ReductionResult r = reduce_perturbation(spec, e);
  CHECK(r.converged);
  CHECK(r.iterations <= 10);
  CHECK(r.off_pattern_residual <= 1e-10);
  const Matrix lhs = r.s.adjoint() * (a + e) * r.s;
  CHECK((lhs - (a + r.d)).norm() <= 1e-10 * (1 + (a + e).norm()));
  // d lives on the single star of the pattern
  CHECK(std::abs(r.d(0, 0)) == 0.0);
  CHECK(std::abs(r.d(0, 1)) == 0.0);
  CHECK(std::abs(r.d(1, 1)) == 0.0);
}

TEST_CASE("circle and bullet class constraints hold at convergence") {
  const CanonicalSpec spec =
      CanonicalSpec::of({CanonicalBlock::delta(3, kI), CanonicalBlock::delta(1, 1)});
  const Pattern p = assemble_pattern(spec);
  RandomSource rng(59);
  Matrix e = random_matrix(rng, 4, 4);
  e *= 1e-3 / e.norm();

  const ReductionResult r = reduce_perturbation(spec, e);
  CHECK(r.converged);
  CHECK(class_violation(r.d, p) <= 1e-10);
  CHECK(r.off_pattern_residual <= 1e-10);
}

TEST_CASE("first-iteration residual contracts quadratically") {
  const CanonicalSpec spec = CanonicalSpec::of({CanonicalBlock::jordan(2)});
  RandomSource rng(61);
  Matrix e0 = random_matrix(rng, 2, 2);
  e0 /= e0.norm();

  auto first_residual = [&](double scale) {
    const ReductionResult r =
        reduce_perturbation(spec, scale * e0, 1e-300, 1);
    return r.off_pattern_residual;
  };
  const double full = first_residual(1e-2);
  const double half = first_residual(5e-3);
  CHECK(full > 0);
  // quadratic leading term; 3.5 leaves room for the cubic correction
  CHECK(full / half >= 3.5);
}

TEST_CASE("normal form depends smoothly on the perturbation line") {
  const CanonicalSpec spec = CanonicalSpec::of({CanonicalBlock::jordan(2)});
  RandomSource rng(67);
  Matrix e0 = random_matrix(rng, 2, 2);
  e0 /= e0.norm();

  const std::vector<double> ts = {0.0, 2e-4, 4e-4, 6e-4, 8e-4, 1e-3};
  std::vector<Complex> values;
  for (double t : ts) {
    const ReductionResult r = reduce_perturbation(spec, t * e0, 1e-12, 25);
    REQUIRE(r.converged);
    values.push_back(r.d(1, 0));  // the single star of the pattern
  }

  // degree-2 least-squares fit per component, then the largest deviation
  RealMatrix vand(static_cast<Eigen::Index>(ts.size()), 3);
  for (size_t k = 0; k < ts.size(); ++k) {
    vand(static_cast<Eigen::Index>(k), 0) = 1.0;
    vand(static_cast<Eigen::Index>(k), 1) = ts[k];
    vand(static_cast<Eigen::Index>(k), 2) = ts[k] * ts[k];
  }
  for (int part = 0; part < 2; ++part) {
    RealVector rhs(static_cast<Eigen::Index>(ts.size()));
    for (size_t k = 0; k < ts.size(); ++k) {
      rhs[static_cast<Eigen::Index>(k)] =
          part == 0 ? values[k].real() : values[k].imag();
    }
    const RealVector coef = vand.colPivHouseholderQr().solve(rhs);
    CHECK((vand * coef - rhs).lpNorm<Eigen::Infinity>() <= 1e-6);
  }
}

TEST_CASE("non-convergence is reported, not thrown") {
  const CanonicalSpec spec = CanonicalSpec::of({CanonicalBlock::delta(1, 1)});
  const ReductionResult r = reduce_perturbation(spec, scalar(10.0), 1e-10, 25);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations <= 25);
  CHECK(std::isfinite(r.off_pattern_residual));
}

TEST_CASE("perturbation size must match the canonical matrix") {
  const CanonicalSpec spec = CanonicalSpec::of({CanonicalBlock::jordan(2)});
  CHECK_THROWS_AS(reduce_perturbation(spec, Matrix::Zero(3, 3)), RejectedInput);
}
