#include "starcong/tangent.hpp"

namespace starcong {

RealVector realify(const Matrix& c) {
  const Eigen::Index mn = c.size();
  RealVector v(2 * mn);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      v[k] = c(i, j).real();
      v[mn + k] = c(i, j).imag();
      ++k;
    }
  }
  return v;
}

Matrix unrealify(const RealVector& v, Eigen::Index rows, Eigen::Index cols) {
  const Eigen::Index mn = rows * cols;
  if (v.size() != 2 * mn) throw RejectedInput("unrealify: length mismatch");
  Matrix c(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      c(i, j) = Complex(v[k], v[mn + k]);
      ++k;
    }
  }
  return c;
}

RealLinearOperator phi_map(const Matrix& a) {
  if (a.rows() != a.cols()) throw RejectedInput("phi_map: matrix must be square");
  const Eigen::Index n = a.rows();
  const Eigen::Index nn = n * n;
  RealMatrix op(2 * nn, 2 * nn);
  Matrix c = Matrix::Zero(n, n);
  for (Eigen::Index idx = 0; idx < 2 * nn; ++idx) {
    const Eigen::Index cell = idx % nn;
    const Eigen::Index i = cell % n;
    const Eigen::Index j = cell / n;
    c(i, j) = idx < nn ? Complex(1, 0) : Complex(0, 1);
    op.col(idx) = realify(c.adjoint() * a + a * c);
    c(i, j) = Complex(0, 0);
  }
  return {std::move(op)};
}

RealLinearOperator pair_phi_map(const Matrix& m_mat, const Matrix& n_mat) {
  if (m_mat.rows() != m_mat.cols() || n_mat.rows() != n_mat.cols()) {
    throw RejectedInput("pair_phi_map: both matrices must be square");
  }
  const Eigen::Index m = m_mat.rows();
  const Eigen::Index n = n_mat.rows();
  const Eigen::Index smn = 2 * m * n;  // realified size of one rectangle
  RealMatrix op(2 * smn, 2 * smn);
  Matrix s = Matrix::Zero(m, n);
  Matrix r = Matrix::Zero(n, m);
  auto column = [&](Eigen::Index col) {
    RealVector v(2 * smn);
    v.head(smn) = realify(s.adjoint() * m_mat + n_mat * r);
    v.tail(smn) = realify(r.adjoint() * n_mat + m_mat * s);
    op.col(col) = v;
  };
  for (Eigen::Index idx = 0; idx < smn; ++idx) {
    const Eigen::Index cell = idx % (m * n);
    const Eigen::Index i = cell % m;
    const Eigen::Index j = cell / m;
    s(i, j) = idx < m * n ? Complex(1, 0) : Complex(0, 1);
    column(idx);
    s(i, j) = Complex(0, 0);
  }
  for (Eigen::Index idx = 0; idx < smn; ++idx) {
    const Eigen::Index cell = idx % (m * n);
    const Eigen::Index i = cell % n;
    const Eigen::Index j = cell / n;
    r(i, j) = idx < m * n ? Complex(1, 0) : Complex(0, 1);
    column(smn + idx);
    r(i, j) = Complex(0, 0);
  }
  return {std::move(op)};
}

RealLinearOperator star_commutant_map(const Matrix& a) {
  if (a.rows() != a.cols()) throw RejectedInput("star_commutant_map: matrix must be square");
  const Eigen::Index n = a.rows();
  const Eigen::Index nn = n * n;
  RealMatrix op(2 * nn, 2 * nn);
  Matrix x = Matrix::Zero(n, n);
  for (Eigen::Index idx = 0; idx < 2 * nn; ++idx) {
    const Eigen::Index cell = idx % nn;
    const Eigen::Index i = cell % n;
    const Eigen::Index j = cell / n;
    x(i, j) = idx < nn ? Complex(1, 0) : Complex(0, 1);
    op.col(idx) = realify(x * a + a * x.adjoint());
    x(i, j) = Complex(0, 0);
  }
  return {std::move(op)};
}

RankResult numerical_rank(const RealLinearOperator& op, double tol) {
  if (!(tol > 0)) throw RejectedInput("numerical_rank: tol must be positive");
  Eigen::JacobiSVD<RealMatrix> svd(op.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol * smax) ++rank;
  }
  RankResult out;
  out.rank = rank;
  out.image_basis = svd.matrixU().leftCols(rank);
  out.kernel_basis = svd.matrixV().rightCols(op.dim_in() - rank);
  out.sigma_min_kept = rank > 0 ? sv[rank - 1] : 0.0;
  out.sigma_max_dropped = rank < sv.size() ? sv[rank] : 0.0;
  return out;
}

std::vector<PatternGenerator> pattern_generators(const Pattern& p) {
  std::vector<PatternGenerator> gens;
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      switch (p.at(i, j)) {
        case PatternEntry::Zero:
          break;
        case PatternEntry::Star:
          gens.push_back({i, j, false});
          gens.push_back({i, j, true});
          break;
        case PatternEntry::Circle:
          gens.push_back({i, j, false});
          break;
        case PatternEntry::Bullet:
          gens.push_back({i, j, true});
          break;
      }
    }
  }
  return gens;
}

RealMatrix generator_columns(const Pattern& p, Eigen::Index n) {
  const auto gens = pattern_generators(p);
  const Eigen::Index nn = n * n;
  RealMatrix cols = RealMatrix::Zero(2 * nn, static_cast<Eigen::Index>(gens.size()));
  for (size_t k = 0; k < gens.size(); ++k) {
    // realify(E_ij) and realify(i E_ij) are elementary vectors
    const Eigen::Index cell = static_cast<Eigen::Index>(gens[k].j) * n + gens[k].i;
    cols(gens[k].imaginary ? nn + cell : cell, static_cast<Eigen::Index>(k)) = 1.0;
  }
  return cols;
}

DecompositionReport verify_direct_sum(const Matrix& a, const Pattern& p, double tol) {
  if (a.rows() != a.cols()) throw RejectedInput("verify_direct_sum: matrix must be square");
  if (p.rows != a.rows() || p.cols != a.cols()) {
    throw RejectedInput("verify_direct_sum: pattern size must match the matrix");
  }
  const Eigen::Index n = a.rows();
  const Eigen::Index full = 2 * n * n;

  const RankResult tangent = numerical_rank(phi_map(a), tol);
  const RealMatrix gens = generator_columns(p, n);

  RealMatrix combined(full, tangent.rank + gens.cols());
  combined.leftCols(tangent.rank) = tangent.image_basis;
  combined.rightCols(gens.cols()) = gens;
  const RankResult comb = numerical_rank({std::move(combined)}, tol);

  DecompositionReport report;
  report.n = static_cast<int>(n);
  report.tangent_rank = tangent.rank;
  report.pattern_params = codim(p);
  report.combined_rank = comb.rank;
  report.tolerance = tol;
  report.sigma_min_kept = tangent.sigma_min_kept;
  report.sigma_max_dropped = tangent.sigma_max_dropped;
  report.passed = report.combined_rank == full &&
                  report.tangent_rank + report.pattern_params == full;
  return report;
}

int codim_via_kernel(const Matrix& a, double tol) {
  const RealLinearOperator op = star_commutant_map(a);
  const Eigen::Index dim_in = op.dim_in();
  return static_cast<int>(dim_in) - numerical_rank(op, tol).rank;
}

}  // namespace starcong
