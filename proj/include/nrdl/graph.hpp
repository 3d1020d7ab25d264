#ifndef NRDL_GRAPH_HPP_
#define NRDL_GRAPH_HPP_

#include "nrdl/types.hpp"

namespace nrdl {

// Dense unsupervised similarity matrix over the columns of X:
// M(u, v) = 1 / (1 + ||x_u - x_v||^2). Symmetric, entries in (0, 1],
// unit diagonal.
Matrix pairwise_similarity(const Matrix& X);

// Graph Laplacian L = Z - M with Z the degree diagonal Z_ii = sum_j M(i, j).
// M must be symmetric (exact entrywise check).
Matrix laplacian(const Matrix& M);

}  // namespace nrdl

#endif  // NRDL_GRAPH_HPP_
