#ifndef NRDL_TRAINER_HPP_
#define NRDL_TRAINER_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "nrdl/dataset.hpp"
#include "nrdl/masks.hpp"
#include "nrdl/types.hpp"

namespace nrdl {

struct HyperParams {
  double lambda = 1.0;   // off-block reconstruction weight
  double alpha = 1.0;    // classification error weight
  double beta = 1e-2;    // inter-class projection incoherence weight
  double gamma = 1e-2;   // graph regularizer weight
  double mu = 0.1;       // augmented-Lagrangian penalty, fixed across iterations
  double tol = 1e-5;     // max-norm threshold on the splitting residuals
  int max_iter = 100;
  std::uint64_t init_seed = 0;
  double jitter = 1e-8;  // added to every matrix inversion
  // Reproduces the P update without the 2*beta cross-covariance factor
  // (Jacobi sweep over old blocks). Off by default.
  bool legacy_p_update = false;
  Index dict_size = 0;   // atoms K; 0 means one atom per training sample

  void validate() const;
};

// All iterates of one training run plus the fixed problem data.
struct TrainerState {
  Matrix X;   // d x N, unit columns
  Matrix H;   // C x N one-hot labels
  Matrix L;   // N x N graph Laplacian of the training similarities
  BlockMask mask;
  std::vector<std::vector<Index>> class_columns;  // sample columns per class
  int num_classes = 0;

  Matrix D;   // d x K dictionary
  Matrix S;   // K x N codes, entrywise >= 0 at iteration boundaries
  Matrix W;   // C x K classifier
  Matrix P;   // C x N auxiliary (incoherence split)
  Matrix J;   // C x N auxiliary (graph split)
  Matrix C1;  // C x N multiplier for WS = P
  Matrix C2;  // C x N multiplier for WS = J

  Index dim() const { return X.rows(); }
  Index atoms() const { return D.cols(); }
  Index samples() const { return X.cols(); }
};

struct IterationRecord {
  int iteration = 0;      // 1-based
  double objective = 0.0;
  double residual_p = 0.0;  // ||WS - P||_inf
  double residual_j = 0.0;  // ||WS - J||_inf
  double min_code = 0.0;    // min entry of S at the iteration boundary
};

using ConvergenceTrace = std::vector<IterationRecord>;

struct TrainedModel {
  Matrix D;  // d x K
  Matrix W;  // C x K
  HyperParams params;
  int iterations = 0;
  double residual_p = 0.0;
  double residual_j = 0.0;
  bool converged = false;

  Index dim() const { return D.rows(); }
  Index atoms() const { return D.cols(); }
  Index classes() const { return W.rows(); }
};

// Initialization: normalized training columns become the dictionary (atom
// class = sample class; when dict_size != N atoms are drawn per class with
// replacement, proportional counts), codes are clamped ridge codes of X over
// D, the classifier is the least-squares fit of H on those codes, and the
// auxiliaries start consistent (P = J = WS, zero multipliers).
TrainerState init_state(const Dataset& train, const HyperParams& params);

// Closed-form block updates. Each returns the exact minimizer of its
// jittered subproblem with every other iterate held fixed.
Matrix update_S_raw(const TrainerState& state, const HyperParams& params);
Matrix update_S(const TrainerState& state, const HyperParams& params);
Matrix update_W(const TrainerState& state, const HyperParams& params);
Matrix update_P(const TrainerState& state, const HyperParams& params);
Matrix update_J(const TrainerState& state, const HyperParams& params);
Matrix update_D(const TrainerState& state, const HyperParams& params);

// C1 += mu (WS - P), C2 += mu (WS - J).
void update_multipliers(TrainerState& state, const HyperParams& params);

// Converged iff max(||WS - P||_inf, ||WS - J||_inf) <= tol.
std::pair<bool, std::pair<double, double>> check_convergence(
    const TrainerState& state, const HyperParams& params);

// Full objective with the incoherence and graph terms evaluated on WS
// itself, not on the auxiliaries.
double objective(const TrainerState& state, const HyperParams& params);

// Runs the block updates S, W, P, J, D, multipliers until the residual test
// passes or max_iter is reached. Non-convergence is reported, not thrown.
std::pair<TrainedModel, ConvergenceTrace> train(const Dataset& train,
                                                const HyperParams& params);

}  // namespace nrdl

#endif  // NRDL_TRAINER_HPP_
