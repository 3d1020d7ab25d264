#include "nrdl/graph.hpp"

namespace nrdl {

Matrix pairwise_similarity(const Matrix& X) {
  if (X.cols() < 1) throw data_error("pairwise_similarity: empty matrix");
  if (!all_finite(X)) {
    throw data_error("pairwise_similarity: non-finite input");
  }
  const Index n = X.cols();
  Matrix M = Matrix::Ones(n, n);
  for (Index u = 0; u < n; ++u) {
    for (Index v = u + 1; v < n; ++v) {
      const double d2 = (X.col(u) - X.col(v)).squaredNorm();
      const double w = 1.0 / (1.0 + d2);
      M(u, v) = w;
      M(v, u) = w;
    }
  }
  return M;
}

Matrix laplacian(const Matrix& M) {
  if (M.rows() != M.cols()) throw data_error("laplacian: matrix not square");
  for (Index u = 0; u < M.rows(); ++u) {
    for (Index v = u + 1; v < M.cols(); ++v) {
      if (M(u, v) != M(v, u)) {
        throw data_error("laplacian: matrix not symmetric at (" +
                         std::to_string(u) + "," + std::to_string(v) + ")");
      }
    }
  }
  Matrix L = -M;
  for (Index i = 0; i < M.rows(); ++i) {
    L(i, i) += M.row(i).sum();
  }
  return L;
}

}  // namespace nrdl
