#include "nrdl/coders.hpp"

namespace nrdl {

namespace {

void check_inputs(const Matrix& D, const Vector& y) {
  if (D.rows() != y.size()) {
    throw data_error("coding: dimension mismatch, dictionary has " +
                     std::to_string(D.rows()) + " rows but sample has " +
                     std::to_string(y.size()) + " entries");
  }
  if (!all_finite(D) || !y.allFinite()) {
    throw data_error("coding: non-finite input");
  }
}

}  // namespace

NnlsSolver::NnlsSolver(const Matrix& D, const NnlsParams& params)
    : D_(D), params_(params) {
  if (!(params.rho > 0.0) || !(params.tol > 0.0) || params.max_iter < 1) {
    throw data_error("nnls parameters must be positive");
  }
  if (!all_finite(D_)) throw data_error("coding: non-finite input");
  const Index k = D_.cols();
  Matrix gram = D_.transpose() * D_;
  gram.diagonal().array() += params_.rho;
  gram_.compute(gram);
  if (gram_.info() != Eigen::Success) {
    throw numeric_error("nnls: failed to factor gram matrix (" +
                        std::to_string(k) + " atoms)");
  }
}

Vector NnlsSolver::solve(const Vector& y, NnlsReport* report) const {
  check_inputs(D_, y);
  const Index k = D_.cols();
  const Vector dty = D_.transpose() * y;

  Vector z = Vector::Zero(k);
  Vector u = Vector::Zero(k);
  NnlsReport rep;
  for (int it = 0; it < params_.max_iter; ++it) {
    const Vector eta = gram_.solve(dty + params_.rho * (z - u));
    const Vector z_new = (eta + u).cwiseMax(0.0);
    rep.dual_residual =
        (z.size() == 0) ? 0.0
                        : params_.rho * (z_new - z).cwiseAbs().maxCoeff();
    z = z_new;
    u += eta - z;
    rep.primal_residual = (eta - z).cwiseAbs().maxCoeff();
    rep.iterations = it + 1;
    if (rep.primal_residual <= params_.tol &&
        rep.dual_residual <= params_.tol) {
      rep.converged = true;
      break;
    }
  }
  if (report) *report = rep;
  return z;
}

RidgeSolver::RidgeSolver(const Matrix& D, double reg) : D_(D), reg_(reg) {
  if (!(reg > 0.0)) throw data_error("ridge regularizer must be positive");
  if (!all_finite(D_)) throw data_error("coding: non-finite input");
  Matrix gram = D_.transpose() * D_;
  gram.diagonal().array() += reg_;
  gram_.compute(gram);
  if (gram_.info() != Eigen::Success) {
    throw numeric_error("ridge: failed to factor gram matrix");
  }
}

Vector RidgeSolver::solve(const Vector& y) const {
  check_inputs(D_, y);
  return gram_.solve(D_.transpose() * y);
}

Vector solve_nnls(const Matrix& D, const Vector& y, const NnlsParams& params,
                  NnlsReport* report) {
  return NnlsSolver(D, params).solve(y, report);
}

Vector solve_ridge(const Matrix& D, const Vector& y, double reg) {
  return RidgeSolver(D, reg).solve(y);
}

}  // namespace nrdl
