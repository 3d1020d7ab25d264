#include "nrdl/masks.hpp"

namespace nrdl {

BlockMask build_block_mask(const std::vector<int>& atom_labels,
                           const std::vector<int>& sample_labels) {
  if (atom_labels.empty() || sample_labels.empty()) {
    throw data_error("build_block_mask: empty label sequence");
  }
  for (int l : atom_labels) {
    if (l < 0) throw data_error("build_block_mask: negative atom label");
  }
  for (int l : sample_labels) {
    if (l < 0) throw data_error("build_block_mask: negative sample label");
  }
  const Index k = static_cast<Index>(atom_labels.size());
  const Index n = static_cast<Index>(sample_labels.size());
  BlockMask mask;
  mask.Q.resize(k, n);
  for (Index a = 0; a < k; ++a) {
    for (Index i = 0; i < n; ++i) {
      mask.Q(a, i) = atom_labels[static_cast<std::size_t>(a)] ==
                             sample_labels[static_cast<std::size_t>(i)]
                         ? 1.0
                         : 0.0;
    }
  }
  mask.A = Matrix::Ones(k, n) - mask.Q;
  mask.atom_labels = atom_labels;
  mask.sample_labels = sample_labels;
  return mask;
}

Matrix off_block(const Matrix& S, const BlockMask& mask) {
  if (S.rows() != mask.A.rows() || S.cols() != mask.A.cols()) {
    throw data_error("off_block: dimension mismatch, S is " +
                     std::to_string(S.rows()) + "x" + std::to_string(S.cols()) +
                     ", mask is " + std::to_string(mask.A.rows()) + "x" +
                     std::to_string(mask.A.cols()));
  }
  return mask.A.cwiseProduct(S);
}

}  // namespace nrdl
