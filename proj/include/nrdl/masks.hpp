#ifndef NRDL_MASKS_HPP_
#define NRDL_MASKS_HPP_

#include <vector>

#include "nrdl/types.hpp"

namespace nrdl {

// Ideal block indicator over (atom, sample) pairs. Q(k, i) = 1 when atom k
// and sample i share a class, A = O - Q picks the off-block entries.
// Stored densely as 0/1 reals so both compose with matrix arithmetic.
struct BlockMask {
  Matrix Q;  // K x N
  Matrix A;  // K x N
  std::vector<int> atom_labels;
  std::vector<int> sample_labels;
};

BlockMask build_block_mask(const std::vector<int>& atom_labels,
                           const std::vector<int>& sample_labels);

// Hadamard product A .* S: the coding entries whose atom class differs from
// the sample class, zeros elsewhere.
Matrix off_block(const Matrix& S, const BlockMask& mask);

}  // namespace nrdl

#endif  // NRDL_MASKS_HPP_
