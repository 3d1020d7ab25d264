#include "nrdl/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nrdl/rng.hpp"

namespace nrdl {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
  const std::string t = trim(cell);
  const char* begin = t.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (t.empty() || end != begin + t.size()) {
    throw data_error("non-numeric cell at (" + std::to_string(row + 1) + "," +
                     std::to_string(col + 1) + ")");
  }
  if (!std::isfinite(v)) {
    throw data_error("non-finite value at (" + std::to_string(row + 1) + "," +
                     std::to_string(col + 1) + ")");
  }
  return v;
}

}  // namespace

Dataset load_dataset(const std::string& samples_path,
                     const std::string& labels_path) {
  std::ifstream sf(samples_path);
  if (!sf) throw data_error("cannot open samples file: " + samples_path);

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(sf, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) {
      ++lineno;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(ss, cell, ',')) {
      row.push_back(parse_cell(cell, lineno, col));
      ++col;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw data_error("dimension mismatch: row " + std::to_string(lineno + 1) +
                       " has " + std::to_string(row.size()) +
                       " cells, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
    ++lineno;
  }
  if (rows.empty()) throw data_error("empty file: " + samples_path);

  std::ifstream lf(labels_path);
  if (!lf) throw data_error("cannot open labels file: " + labels_path);
  std::vector<int> labels;
  std::size_t lab_lineno = 0;
  while (std::getline(lf, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    ++lab_lineno;
    if (t.empty()) continue;
    const char* begin = t.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end != begin + t.size()) {
      throw data_error("non-integer label at line " +
                       std::to_string(lab_lineno));
    }
    if (v < 0) {
      throw data_error("negative label at line " + std::to_string(lab_lineno));
    }
    labels.push_back(static_cast<int>(v));
  }
  if (labels.empty()) throw data_error("empty file: " + labels_path);
  if (labels.size() != rows.size()) {
    throw data_error("dimension mismatch: " + std::to_string(rows.size()) +
                     " sample rows but " + std::to_string(labels.size()) +
                     " labels");
  }

  const Index n = static_cast<Index>(rows.size());
  const Index d = static_cast<Index>(rows.front().size());
  Dataset ds;
  ds.samples.resize(d, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < d; ++j) {
      ds.samples(j, i) = rows[static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(j)];
    }
  }
  ds.labels = std::move(labels);
  ds.num_classes = 1 + *std::max_element(ds.labels.begin(), ds.labels.end());

  std::vector<int> counts(static_cast<std::size_t>(ds.num_classes), 0);
  for (int l : ds.labels) ++counts[static_cast<std::size_t>(l)];
  for (int c = 0; c < ds.num_classes; ++c) {
    if (counts[static_cast<std::size_t>(c)] == 0) {
      std::cerr << "warning: class " << c << " has no samples\n";
    }
  }
  return ds;
}

Matrix normalize_columns(const Matrix& X) {
  Matrix out = X;
  for (Index c = 0; c < X.cols(); ++c) {
    const double norm = X.col(c).norm();
    if (norm < 1e-150) {
      throw data_error("column " + std::to_string(c) + " has zero norm");
    }
    out.col(c) /= norm;
  }
  return out;
}

Matrix build_label_matrix(const Dataset& ds) {
  const Index n = ds.size();
  Matrix H = Matrix::Zero(ds.num_classes, n);
  for (Index i = 0; i < n; ++i) {
    H(ds.labels[static_cast<std::size_t>(i)], i) = 1.0;
  }
  return H;
}

std::pair<Dataset, Dataset> split_per_class(const Dataset& ds,
                                            int n_train_per_class,
                                            std::uint64_t seed) {
  if (n_train_per_class < 1) {
    throw data_error("n_train_per_class must be at least 1");
  }
  std::vector<std::vector<Index>> by_class(
      static_cast<std::size_t>(ds.num_classes));
  for (Index i = 0; i < ds.size(); ++i) {
    by_class[static_cast<std::size_t>(ds.labels[static_cast<std::size_t>(i)])]
        .push_back(i);
  }

  Rng rng(seed);
  std::vector<Index> train_cols, test_cols;
  for (int c = 0; c < ds.num_classes; ++c) {
    auto& cols = by_class[static_cast<std::size_t>(c)];
    if (cols.size() < static_cast<std::size_t>(n_train_per_class) + 1) {
      throw data_error("class " + std::to_string(c) + " has only " +
                       std::to_string(cols.size()) + " samples, need at least " +
                       std::to_string(n_train_per_class + 1));
    }
    rng.shuffle(cols);
    std::vector<Index> tr(cols.begin(),
                          cols.begin() + n_train_per_class);
    std::vector<Index> te(cols.begin() + n_train_per_class, cols.end());
    std::sort(tr.begin(), tr.end());
    std::sort(te.begin(), te.end());
    train_cols.insert(train_cols.end(), tr.begin(), tr.end());
    test_cols.insert(test_cols.end(), te.begin(), te.end());
  }

  auto take = [&](const std::vector<Index>& cols) {
    Dataset out;
    out.samples.resize(ds.dim(), static_cast<Index>(cols.size()));
    out.labels.reserve(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      out.samples.col(static_cast<Index>(k)) = ds.samples.col(cols[k]);
      out.labels.push_back(ds.labels[static_cast<std::size_t>(cols[k])]);
    }
    out.num_classes = ds.num_classes;
    return out;
  };
  return {take(train_cols), take(test_cols)};
}

Matrix add_salt_pepper(const Matrix& X, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw data_error("noise density must lie in [0, 1]");
  }
  if (X.size() > 0 && (X.minCoeff() < 0.0 || X.maxCoeff() > 1.0)) {
    throw data_error("salt-and-pepper input entries must lie in [0, 1]");
  }
  if (density == 0.0) return X;

  Matrix out = X;
  Rng rng(seed);
  for (Index c = 0; c < out.cols(); ++c) {
    for (Index r = 0; r < out.rows(); ++r) {
      const double u = rng.uniform();
      if (u < density) {
        out(r, c) = (u < 0.5 * density) ? 0.0 : 1.0;
      }
    }
  }
  return out;
}

}  // namespace nrdl
