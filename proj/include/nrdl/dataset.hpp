#ifndef NRDL_DATASET_HPP_
#define NRDL_DATASET_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nrdl/types.hpp"

namespace nrdl {

// Labelled sample matrix, one sample per column.
struct Dataset {
  Matrix samples;           // d x N
  std::vector<int> labels;  // size N, class indices in [0, num_classes)
  int num_classes = 0;

  Index dim() const { return samples.rows(); }
  Index size() const { return samples.cols(); }
};

// Reads a samples CSV (one sample per row, no header) and a labels file
// (one base-0 integer per line). Samples are transposed to column-per-sample.
// Classes missing from [0, max label] only produce a warning on stderr;
// they are rejected later, at split time.
Dataset load_dataset(const std::string& samples_path,
                     const std::string& labels_path);

// Rescales every column to unit Euclidean norm. A zero column is an error.
Matrix normalize_columns(const Matrix& X);

// One-hot label matrix H (C x N): H(c, i) = 1 iff labels[i] == c.
Matrix build_label_matrix(const Dataset& ds);

// Draws exactly n_train_per_class columns of every class into the train
// split, the rest into test. Uniform and deterministic per seed. Both splits
// keep samples grouped by class, original order within a class.
std::pair<Dataset, Dataset> split_per_class(const Dataset& ds,
                                            int n_train_per_class,
                                            std::uint64_t seed);

// Salt-and-pepper corruption: each entry independently hit with probability
// density; a hit becomes 0 or 1 with equal probability. Requires entries
// already in [0, 1]. density 0 returns the input unchanged.
Matrix add_salt_pepper(const Matrix& X, double density, std::uint64_t seed);

}  // namespace nrdl

#endif  // NRDL_DATASET_HPP_
