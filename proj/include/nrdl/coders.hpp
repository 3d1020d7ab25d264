#ifndef NRDL_CODERS_HPP_
#define NRDL_CODERS_HPP_

#include "nrdl/types.hpp"

namespace nrdl {

struct NnlsParams {
  double rho = 1.0;     // penalty weight of the splitting
  int max_iter = 1000;
  double tol = 1e-8;    // on both primal and dual residuals
};

struct NnlsReport {
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool converged = false;
};

// Non-negative least squares min ||y - D eta||^2 s.t. eta >= 0, solved by
// splitting eta = z with z clamped at zero: a cached least-squares step for
// eta, a clamp for z, and a dual update. The returned code is the feasible
// z iterate, entrywise >= 0 even when the iteration cap is hit.
// Factors (D^T D + rho I) once; reuse one solver across a test batch.
class NnlsSolver {
 public:
  NnlsSolver(const Matrix& D, const NnlsParams& params = {});

  Vector solve(const Vector& y, NnlsReport* report = nullptr) const;

  Index dim() const { return D_.rows(); }
  Index atoms() const { return D_.cols(); }

 private:
  Matrix D_;
  NnlsParams params_;
  Eigen::LDLT<Matrix> gram_;
};

// Ridge codes (D^T D + reg I)^{-1} D^T y, no sign constraint.
class RidgeSolver {
 public:
  RidgeSolver(const Matrix& D, double reg);

  Vector solve(const Vector& y) const;

  Index dim() const { return D_.rows(); }
  Index atoms() const { return D_.cols(); }

 private:
  Matrix D_;
  double reg_;
  Eigen::LDLT<Matrix> gram_;
};

// One-shot conveniences; batch callers should hold a solver instead.
Vector solve_nnls(const Matrix& D, const Vector& y,
                  const NnlsParams& params = {}, NnlsReport* report = nullptr);
Vector solve_ridge(const Matrix& D, const Vector& y, double reg);

}  // namespace nrdl

#endif  // NRDL_CODERS_HPP_
