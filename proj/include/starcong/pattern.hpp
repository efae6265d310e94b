#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "starcong/canonical.hpp"
#include "starcong/types.hpp"

namespace starcong {

enum class PatternEntry : std::uint8_t { Zero, Star, Circle, Bullet };

/// A (0,*,o,!) grid: Zero entries stay zero, Star entries hold a free complex
/// parameter, Circle a free real one, Bullet a free pure-imaginary one.
/// Positions are 0-based in code; the shape descriptions in the docs below use
/// 1-based row/column numbers.
struct Pattern {
  int rows = 0;
  int cols = 0;
  std::vector<PatternEntry> entries;  // row-major
  std::vector<int> partition;         // block dims when assembled from a spec

  static Pattern zeros(int rows, int cols);

  PatternEntry at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
  PatternEntry& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const Pattern&) const = default;
};

enum class PrimitiveKind { SWarrow, SWvdash, Spoon, FilledSpoon, UpDown, Pstrip };

/// The m x n primitive shapes:
///   SWarrow:     full first column of stars if m <= n, else full bottom row
///                (square case: first-column form).
///   SWvdash:     stars at (m,1),(m-2,1),... if m <= n, else (m,1),(m,3),...
///                (square case: first-column form).
///   Spoon:       square only; diagonal stars at 1..floor(n/2), a circle next
///                if n is odd, zeros after.
///   FilledSpoon: same with a bullet instead of the circle.
///   UpDown:      full bottom row of stars.
///   Pstrip:      m <= n only; stars at (m, m+2)..(m, n).
Pattern primitive(PrimitiveKind kind, int m, int n);

/// Grid rotated clockwise by quarter_turns * 90 degrees.
Pattern rotate_cw(const Pattern& p, int quarter_turns);

// Rotated corner strips for an r x c target.
Pattern sw_arrow(int r, int c);
Pattern nw_arrow(int r, int c);
Pattern ne_arrow(int r, int c);
Pattern se_arrow(int r, int c);

/// Deformation shape of a single canonical block:
///   H_m(lambda)  -> 2m x 2m, SWarrow(m,m) in the lower-left m x m cell;
///   mu Delta_n   -> Spoon if mu is not real, FilledSpoon if mu is real;
///   J_n(0)       -> SWvdash(n,n).
Pattern diagonal_block_pattern(const CanonicalBlock& b);

/// Deformation shapes (D_ji, D_ij) for an ordered block pair b_i before b_j,
/// with D_ji of size dim(b_j) x dim(b_i). Two Jordan blocks must come in
/// descending size order. Pairs given against canonical kind order (H before
/// Delta before Jordan) are handled by the swap symmetry of the pair space.
std::pair<Pattern, Pattern> offdiagonal_pair_pattern(const CanonicalBlock& b_i,
                                                     const CanonicalBlock& b_j);

/// Full n x n deformation shape of a canonical spec, blocks placed along the
/// diagonal partition and pair shapes off it.
Pattern assemble_pattern(const CanonicalSpec& spec);

/// Real parameter count: 2 * stars + circles + bullets.
int codim(const Pattern& p);

/// Real pair (eps, eps') per non-Zero position, keyed 0-based.
struct ParameterAssignment {
  std::map<std::pair<int, int>, std::pair<double, double>> values;
};

/// Star(i,j) -> eps + i*eps', Circle -> eps, Bullet -> i*eps'.
/// Keys must cover exactly the non-Zero positions.
Matrix instantiate(const Pattern& p, const ParameterAssignment& params);

/// '.' Zero, '*' Star, 'o' Circle, '!' Bullet; rows separated by newlines.
std::string to_ascii(const Pattern& p);

}  // namespace starcong
