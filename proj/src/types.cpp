#include "starcong/types.hpp"

namespace starcong {

void require_finite_entries(const Matrix& a, const std::string& what) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!is_finite(a(i, j))) {
        throw RejectedInput(what + ": entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") is not finite");
      }
    }
  }
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix out = Matrix::Zero(n, n);
  Eigen::Index off = 0;
  for (const auto& b : blocks) {
    out.block(off, off, b.rows(), b.cols()) = b;
    off += b.rows();
  }
  return out;
}

}  // namespace starcong
