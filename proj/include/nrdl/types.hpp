#ifndef NRDL_TYPES_HPP_
#define NRDL_TYPES_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nrdl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Bad or inconsistent input: malformed files, dimension mismatches,
// precondition violations. Maps to CLI exit code 2.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown: singular systems, non-finite intermediates.
// Maps to CLI exit code 3.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

// Entrywise max-abs norm; 0 for empty matrices.
inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace nrdl

#endif  // NRDL_TYPES_HPP_
