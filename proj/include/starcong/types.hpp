#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace starcong {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// |mu| ingestion window for Delta blocks; mu is renormalized to exact unit
// modulus afterwards.
inline constexpr double kUnitModulusTol = 1e-12;

// Absolute tolerance for the discrete equality decisions lambda = lambda' and
// mu = +-mu' that select pattern shapes.
inline constexpr double kScalarEqTol = 1e-12;

// Default relative singular-value threshold for rank decisions.
inline constexpr double kDefaultRankTol = 1e-9;

/// Input violates a documented precondition or type invariant.
struct RejectedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A solve became numerically meaningless (vanishing denominator/pivot,
/// condition number past the documented bound).
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file: JSON syntax or schema mismatch.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool close(Complex a, Complex b, double tol = kScalarEqTol) {
  return std::abs(a - b) <= tol;
}

void require_finite_entries(const Matrix& a, const std::string& what);

/// Block-diagonal direct sum, in the given order.
Matrix direct_sum(const std::vector<Matrix>& blocks);

}  // namespace starcong
