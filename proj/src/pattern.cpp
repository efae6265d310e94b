#include "starcong/pattern.hpp"

#include <cmath>

namespace starcong {

namespace {

bool is_real_scalar(Complex z) { return std::abs(z.imag()) <= kScalarEqTol; }

// Place src into dst with its top-left corner at (row_off, col_off). Only
// Zero cells of dst may be overwritten; overlapping non-Zero cells would mean
// the table was assembled wrong.
void paste(Pattern& dst, const Pattern& src, int row_off, int col_off) {
  for (int i = 0; i < src.rows; ++i) {
    for (int j = 0; j < src.cols; ++j) {
      const PatternEntry e = src.at(i, j);
      if (e == PatternEntry::Zero) continue;
      PatternEntry& cell = dst.at(row_off + i, col_off + j);
      if (cell != PatternEntry::Zero) {
        throw RejectedInput("pattern paste: overlapping non-zero cells");
      }
      cell = e;
    }
  }
}

// Entrywise union of two shapes of equal size with disjoint supports.
Pattern merge(const Pattern& a, const Pattern& b) {
  Pattern out = a;
  paste(out, b, 0, 0);
  return out;
}

int kind_order(BlockKind k) {
  switch (k) {
    case BlockKind::H: return 0;
    case BlockKind::Delta: return 1;
    case BlockKind::Jordan: return 2;
  }
  return 3;
}

// Table of the pair shapes (D_yx, D_xy) for x before y in canonical kind
// order; D_yx is dim(y) x dim(x).
std::pair<Pattern, Pattern> pair_table(const CanonicalBlock& x, const CanonicalBlock& y) {
  const int dx = x.dim();
  const int dy = y.dim();
  Pattern d_yx = Pattern::zeros(dy, dx);
  Pattern d_xy = Pattern::zeros(dx, dy);

  if (x.kind == BlockKind::H && y.kind == BlockKind::H) {
    if (close(x.lambda, y.lambda)) {
      const int m = x.size, n = y.size;
      paste(d_yx, ne_arrow(n, m), 0, m);
      paste(d_yx, sw_arrow(n, m), n, 0);
    }
    return {d_yx, d_xy};
  }
  if (x.kind == BlockKind::Delta && y.kind == BlockKind::Delta) {
    if (close(x.mu, y.mu) || close(x.mu, -y.mu)) {
      d_yx = nw_arrow(dy, dx);
    }
    return {d_yx, d_xy};
  }
  if (x.kind == BlockKind::Jordan && y.kind == BlockKind::Jordan) {
    const int m = x.size, n = y.size;
    if (m < n) throw RejectedInput("pair pattern: Jordan sizes must be descending");
    d_yx = primitive(PrimitiveKind::SWvdash, n, m);
    if (n % 2 == 1) d_yx = merge(d_yx, primitive(PrimitiveKind::Pstrip, n, m));
    d_xy = primitive(PrimitiveKind::SWvdash, m, n);
    return {d_yx, d_xy};
  }
  if (x.kind == BlockKind::H && y.kind == BlockKind::Delta) {
    return {d_yx, d_xy};
  }
  // (H, Jordan) and (Delta, Jordan): a full star row when the Jordan size is
  // odd, nothing otherwise.
  if (y.kind == BlockKind::Jordan) {
    if (y.size % 2 == 1) d_yx = primitive(PrimitiveKind::UpDown, dy, dx);
    return {d_yx, d_xy};
  }
  throw RejectedInput("pair pattern: unsupported kind combination");
}

}  // namespace

Pattern Pattern::zeros(int rows, int cols) {
  if (rows < 1 || cols < 1) throw RejectedInput("pattern: dimensions must be positive");
  Pattern p;
  p.rows = rows;
  p.cols = cols;
  p.entries.assign(static_cast<size_t>(rows) * cols, PatternEntry::Zero);
  return p;
}

Pattern primitive(PrimitiveKind kind, int m, int n) {
  if (m < 1 || n < 1) throw RejectedInput("primitive: dimensions must be positive");
  Pattern p = Pattern::zeros(m, n);
  switch (kind) {
    case PrimitiveKind::SWarrow:
      if (m <= n) {
        for (int i = 0; i < m; ++i) p.at(i, 0) = PatternEntry::Star;
      } else {
        for (int j = 0; j < n; ++j) p.at(m - 1, j) = PatternEntry::Star;
      }
      break;
    case PrimitiveKind::SWvdash:
      if (m <= n) {
        for (int i = m - 1; i >= 0; i -= 2) p.at(i, 0) = PatternEntry::Star;
      } else {
        for (int j = 0; j < n; j += 2) p.at(m - 1, j) = PatternEntry::Star;
      }
      break;
    case PrimitiveKind::Spoon:
    case PrimitiveKind::FilledSpoon: {
      if (m != n) throw RejectedInput("spoon: square shape required");
      const int k = n / 2;
      for (int i = 0; i < k; ++i) p.at(i, i) = PatternEntry::Star;
      if (n % 2 == 1) {
        p.at(k, k) = kind == PrimitiveKind::Spoon ? PatternEntry::Circle
                                                  : PatternEntry::Bullet;
      }
      break;
    }
    case PrimitiveKind::UpDown:
      for (int j = 0; j < n; ++j) p.at(m - 1, j) = PatternEntry::Star;
      break;
    case PrimitiveKind::Pstrip:
      if (m > n) throw RejectedInput("P strip: m <= n required");
      for (int j = m + 1; j < n; ++j) p.at(m - 1, j) = PatternEntry::Star;
      break;
  }
  return p;
}

Pattern rotate_cw(const Pattern& p, int quarter_turns) {
  int q = quarter_turns % 4;
  if (q < 0) q += 4;
  Pattern out = p;
  for (int step = 0; step < q; ++step) {
    Pattern next = Pattern::zeros(out.cols, out.rows);
    for (int i = 0; i < out.rows; ++i) {
      for (int j = 0; j < out.cols; ++j) {
        next.at(j, out.rows - 1 - i) = out.at(i, j);
      }
    }
    next.partition.clear();
    out = next;
  }
  return out;
}

Pattern sw_arrow(int r, int c) { return primitive(PrimitiveKind::SWarrow, r, c); }
Pattern nw_arrow(int r, int c) { return rotate_cw(primitive(PrimitiveKind::SWarrow, c, r), 1); }
Pattern ne_arrow(int r, int c) { return rotate_cw(primitive(PrimitiveKind::SWarrow, r, c), 2); }
Pattern se_arrow(int r, int c) { return rotate_cw(primitive(PrimitiveKind::SWarrow, c, r), 3); }

Pattern diagonal_block_pattern(const CanonicalBlock& b) {
  switch (b.kind) {
    case BlockKind::H: {
      const int m = b.size;
      Pattern p = Pattern::zeros(2 * m, 2 * m);
      paste(p, sw_arrow(m, m), m, 0);
      return p;
    }
    case BlockKind::Delta:
      // Both shapes are valid when mu is neither real nor imaginary; the
      // circle spoon is the fixed choice there.
      return primitive(is_real_scalar(b.mu) ? PrimitiveKind::FilledSpoon
                                            : PrimitiveKind::Spoon,
                       b.size, b.size);
    case BlockKind::Jordan:
      return primitive(PrimitiveKind::SWvdash, b.size, b.size);
  }
  throw RejectedInput("diagonal pattern: unknown kind");
}

std::pair<Pattern, Pattern> offdiagonal_pair_pattern(const CanonicalBlock& b_i,
                                                     const CanonicalBlock& b_j) {
  if (kind_order(b_i.kind) <= kind_order(b_j.kind)) {
    return pair_table(b_i, b_j);
  }
  // Reversed kind order: the pair space of (b_j, b_i) is the component swap
  // of the pair space of (b_i, b_j), so the valid shapes swap too.
  auto [t_yx, t_xy] = pair_table(b_j, b_i);
  return {t_xy, t_yx};
}

Pattern assemble_pattern(const CanonicalSpec& spec) {
  const int n = spec.total_dim();
  Pattern p = Pattern::zeros(n, n);
  std::vector<int> offsets;
  int off = 0;
  for (const auto& b : spec.blocks) {
    offsets.push_back(off);
    off += b.dim();
  }
  for (size_t i = 0; i < spec.blocks.size(); ++i) {
    paste(p, diagonal_block_pattern(spec.blocks[i]), offsets[i], offsets[i]);
    for (size_t j = i + 1; j < spec.blocks.size(); ++j) {
      auto [d_ji, d_ij] = offdiagonal_pair_pattern(spec.blocks[i], spec.blocks[j]);
      paste(p, d_ji, offsets[j], offsets[i]);
      paste(p, d_ij, offsets[i], offsets[j]);
    }
  }
  for (const auto& b : spec.blocks) p.partition.push_back(b.dim());
  return p;
}

int codim(const Pattern& p) {
  int count = 0;
  for (PatternEntry e : p.entries) {
    switch (e) {
      case PatternEntry::Star: count += 2; break;
      case PatternEntry::Circle:
      case PatternEntry::Bullet: count += 1; break;
      case PatternEntry::Zero: break;
    }
  }
  return count;
}

Matrix instantiate(const Pattern& p, const ParameterAssignment& params) {
  size_t expected = 0;
  Matrix out = Matrix::Zero(p.rows, p.cols);
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      const PatternEntry e = p.at(i, j);
      if (e == PatternEntry::Zero) continue;
      ++expected;
      auto it = params.values.find({i, j});
      if (it == params.values.end()) {
        throw RejectedInput("instantiate: missing parameter at (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      const auto [eps, eps_prime] = it->second;
      if (!std::isfinite(eps) || !std::isfinite(eps_prime)) {
        throw RejectedInput("instantiate: parameters must be finite");
      }
      switch (e) {
        case PatternEntry::Star: out(i, j) = Complex(eps, eps_prime); break;
        case PatternEntry::Circle: out(i, j) = Complex(eps, 0); break;
        case PatternEntry::Bullet: out(i, j) = Complex(0, eps_prime); break;
        case PatternEntry::Zero: break;
      }
    }
  }
  if (params.values.size() != expected) {
    throw RejectedInput("instantiate: parameters keyed off the pattern support");
  }
  return out;
}

std::string to_ascii(const Pattern& p) {
  std::string out;
  out.reserve(static_cast<size_t>(p.rows) * (p.cols + 1));
  for (int i = 0; i < p.rows; ++i) {
    if (i > 0) out.push_back('\n');
    for (int j = 0; j < p.cols; ++j) {
      switch (p.at(i, j)) {
        case PatternEntry::Zero: out.push_back('.'); break;
        case PatternEntry::Star: out.push_back('*'); break;
        case PatternEntry::Circle: out.push_back('o'); break;
        case PatternEntry::Bullet: out.push_back('!'); break;
      }
    }
  }
  return out;
}

}  // namespace starcong
