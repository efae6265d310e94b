#pragma once

#include "starcong/canonical.hpp"
#include "starcong/pattern.hpp"
#include "starcong/types.hpp"

namespace starcong {

struct ReductionResult {
  Matrix s;  // nonsingular transformation, S = I at E = 0
  Matrix d;  // pattern-position restriction of s^*(A+E)s - A
  int iterations = 0;
  double off_pattern_residual = 0.0;  // Frobenius norm over pattern-Zero positions
  bool converged = false;
};

/// Frobenius norm of r over the pattern's Zero positions.
double off_pattern_norm(const Matrix& r, const Pattern& p);

/// Entrywise distance from r to the pattern space: Zero positions fully,
/// imaginary parts at circles, real parts at bullets.
double pattern_distance(const Matrix& r, const Pattern& p);

/// r with all pattern-Zero positions zeroed.
Matrix pattern_restriction(const Matrix& r, const Pattern& p);

/// Newton-like reduction of A_can + e to A_can + d with d in pattern space:
/// each step projects the current residual onto tangent (+) pattern space
/// using the linearization frozen at A_can and applies S <- S (I - C).
/// Stops when the distance to pattern space drops below tol; hitting
/// max_iter reports converged = false instead of throwing.
ReductionResult reduce_perturbation(const CanonicalSpec& spec, const Matrix& e,
                                    double tol = 1e-10, int max_iter = 25);

}  // namespace starcong
