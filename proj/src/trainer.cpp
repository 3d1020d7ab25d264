#include "nrdl/trainer.hpp"

#include <cstdio>
#include <string>

#include "nrdl/graph.hpp"
#include "nrdl/rng.hpp"

namespace nrdl {

namespace {

std::string format_diag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Solves (G + jitter I) X = B for symmetric PSD G. The Gram matrices here
// are often rank-deficient with a consistent right-hand side, where LDLT
// still solves accurately but flags rounding-level negative pivots; the
// residual is the reliable health check, not info().
Matrix solve_spd(Matrix G, double jitter, const Matrix& B,
                 const char* what) {
  G.diagonal().array() += jitter;
  const Eigen::LDLT<Matrix> ldlt(G);
  Matrix X = ldlt.solve(B);
  const double scale = max_abs(G) * max_abs(X) + max_abs(B) + 1.0;
  const double residual = max_abs(G * X - B);
  if (!all_finite(X) || !(residual <= 1e-6 * scale)) {
    throw numeric_error(std::string(what) + ": singular " +
                        std::to_string(G.rows()) + "x" +
                        std::to_string(G.cols()) + " system (jitter " +
                        format_diag(jitter) + ", relative residual " +
                        format_diag(residual / scale) + ")");
  }
  return X;
}

// Right division Y = B (G + jitter I)^{-1} for symmetric PSD G.
Matrix solve_spd_right(const Matrix& G, double jitter, const Matrix& B,
                       const char* what) {
  return solve_spd(G, jitter, B.transpose(), what).transpose();
}

Matrix gather_columns(const Matrix& M, const std::vector<Index>& cols) {
  Matrix out(M.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    out.col(static_cast<Index>(k)) = M.col(cols[k]);
  }
  return out;
}

void scatter_columns(Matrix& M, const std::vector<Index>& cols,
                     const Matrix& block) {
  for (std::size_t k = 0; k < cols.size(); ++k) {
    M.col(cols[k]) = block.col(static_cast<Index>(k));
  }
}

}  // namespace

void HyperParams::validate() const {
  if (lambda < 0 || alpha < 0 || beta < 0 || gamma < 0) {
    throw data_error("regularization weights must be non-negative");
  }
  if (!(mu > 0)) throw data_error("mu must be positive");
  if (!(tol > 0)) throw data_error("tol must be positive");
  if (max_iter < 1) throw data_error("max_iter must be at least 1");
  if (jitter < 0) throw data_error("jitter must be non-negative");
  if (dict_size < 0) throw data_error("dict_size must be non-negative");
}

TrainerState init_state(const Dataset& train, const HyperParams& params) {
  params.validate();
  if (train.size() == 0) throw data_error("empty training set");

  TrainerState st;
  st.X = normalize_columns(train.samples);
  st.num_classes = train.num_classes;
  st.H = build_label_matrix(train);
  st.L = laplacian(pairwise_similarity(st.X));

  const Index n = st.X.cols();
  st.class_columns.assign(static_cast<std::size_t>(st.num_classes), {});
  for (Index i = 0; i < n; ++i) {
    st.class_columns[static_cast<std::size_t>(
                         train.labels[static_cast<std::size_t>(i)])]
        .push_back(i);
  }
  for (int c = 0; c < st.num_classes; ++c) {
    if (st.class_columns[static_cast<std::size_t>(c)].empty()) {
      throw data_error("class " + std::to_string(c) +
                       " has no training samples");
    }
  }

  std::vector<int> atom_labels;
  const Index k = params.dict_size == 0 ? n : params.dict_size;
  if (k == n) {
    // One atom per training sample, same order, same class.
    st.D = st.X;
    atom_labels = train.labels;
  } else {
    // Proportional per-class atom counts, remainder to the earliest classes,
    // atoms drawn from the class columns with replacement.
    std::vector<Index> per_class(static_cast<std::size_t>(st.num_classes));
    Index assigned = 0;
    for (int c = 0; c < st.num_classes; ++c) {
      const auto n_c =
          static_cast<Index>(st.class_columns[static_cast<std::size_t>(c)]
                                 .size());
      per_class[static_cast<std::size_t>(c)] = (k * n_c) / n;
      assigned += per_class[static_cast<std::size_t>(c)];
    }
    for (int c = 0; assigned < k; c = (c + 1) % st.num_classes) {
      ++per_class[static_cast<std::size_t>(c)];
      ++assigned;
    }
    for (int c = 0; c < st.num_classes; ++c) {
      if (per_class[static_cast<std::size_t>(c)] == 0) {
        throw data_error("dict_size " + std::to_string(k) +
                         " leaves class " + std::to_string(c) +
                         " without atoms");
      }
    }
    Rng rng(params.init_seed);
    st.D.resize(st.X.rows(), k);
    Index a = 0;
    for (int c = 0; c < st.num_classes; ++c) {
      const auto& cols = st.class_columns[static_cast<std::size_t>(c)];
      for (Index j = 0; j < per_class[static_cast<std::size_t>(c)]; ++j) {
        st.D.col(a++) = st.X.col(cols[static_cast<std::size_t>(
            rng.below(cols.size()))]);
        atom_labels.push_back(c);
      }
    }
  }
  st.mask = build_block_mask(atom_labels, train.labels);

  // Clamped ridge codes of X over D, then a least-squares classifier fit.
  st.S = solve_spd(st.D.transpose() * st.D, params.jitter,
                   st.D.transpose() * st.X, "init codes")
             .cwiseMax(0.0);
  st.W = solve_spd_right(st.S * st.S.transpose(), params.jitter,
                         st.H * st.S.transpose(), "init classifier");
  st.P = st.W * st.S;
  st.J = st.P;
  st.C1 = Matrix::Zero(st.num_classes, n);
  st.C2 = Matrix::Zero(st.num_classes, n);
  return st;
}

Matrix update_S_raw(const TrainerState& state, const HyperParams& params) {
  const Matrix R = state.D * state.mask.Q.cwiseProduct(state.S);
  const Matrix gram_d = state.D.transpose() * state.D;
  const Matrix gram_w = state.W.transpose() * state.W;
  const Matrix lhs =
      (1.0 + params.lambda) * gram_d + (params.alpha + 2.0 * params.mu) * gram_w;
  const Matrix rhs =
      state.D.transpose() * (state.X + params.lambda * R) +
      state.W.transpose() * (params.alpha * state.H + params.mu * state.P -
                             state.C1 + params.mu * state.J - state.C2);
  return solve_spd(lhs, params.jitter, rhs, "update_S");
}

Matrix update_S(const TrainerState& state, const HyperParams& params) {
  return update_S_raw(state, params).cwiseMax(0.0);
}

Matrix update_W(const TrainerState& state, const HyperParams& params) {
  const Matrix target = params.alpha * state.H + params.mu * state.P -
                        state.C1 + params.mu * state.J - state.C2;
  const Matrix gram =
      (params.alpha + 2.0 * params.mu) * (state.S * state.S.transpose());
  return solve_spd_right(gram, params.jitter, target * state.S.transpose(),
                         "update_W");
}

Matrix update_P(const TrainerState& state, const HyperParams& params) {
  const Matrix ws = state.W * state.S;
  const Index c_count = state.num_classes;
  Matrix P = state.P;
  for (Index c = 0; c < c_count; ++c) {
    const auto& cols = state.class_columns[static_cast<std::size_t>(c)];
    Matrix cross = Matrix::Zero(c_count, c_count);
    for (Index j = 0; j < c_count; ++j) {
      if (j == c) continue;
      // Gauss-Seidel: blocks already swept this call are the fresh ones.
      // The legacy switch reproduces the plain Jacobi sweep without the
      // 2*beta factor.
      const Matrix pj = gather_columns(
          params.legacy_p_update ? state.P : P,
          state.class_columns[static_cast<std::size_t>(j)]);
      cross += pj * pj.transpose();
    }
    Matrix lhs = params.legacy_p_update ? cross : (2.0 * params.beta) * cross;
    lhs.diagonal().array() += params.mu;
    const Matrix rhs =
        params.mu * gather_columns(ws, cols) + gather_columns(state.C1, cols);
    scatter_columns(P, cols, solve_spd(lhs, 0.0, rhs, "update_P"));
  }
  return P;
}

Matrix update_J(const TrainerState& state, const HyperParams& params) {
  Matrix lhs = params.gamma * state.L;
  lhs.diagonal().array() += params.mu;
  const Matrix rhs = params.mu * (state.W * state.S) + state.C2;
  return solve_spd_right(lhs, 0.0, rhs, "update_J");
}

Matrix update_D(const TrainerState& state, const HyperParams& params) {
  const Matrix B = off_block(state.S, state.mask);
  const Matrix gram = state.S * state.S.transpose() +
                      params.lambda * (B * B.transpose());
  return solve_spd_right(gram, params.jitter,
                         state.X * state.S.transpose(), "update_D");
}

void update_multipliers(TrainerState& state, const HyperParams& params) {
  const Matrix ws = state.W * state.S;
  state.C1 += params.mu * (ws - state.P);
  state.C2 += params.mu * (ws - state.J);
}

std::pair<bool, std::pair<double, double>> check_convergence(
    const TrainerState& state, const HyperParams& params) {
  const Matrix ws = state.W * state.S;
  const double res_p = max_abs(ws - state.P);
  const double res_j = max_abs(ws - state.J);
  return {std::max(res_p, res_j) <= params.tol, {res_p, res_j}};
}

double objective(const TrainerState& state, const HyperParams& params) {
  const Matrix ws = state.W * state.S;
  double value = (state.X - state.D * state.S).squaredNorm();
  value += params.lambda *
           (state.D * off_block(state.S, state.mask)).squaredNorm();
  value += params.alpha * (state.H - ws).squaredNorm();
  if (params.beta != 0.0) {
    double incoherence = 0.0;
    for (int i = 0; i < state.num_classes; ++i) {
      const Matrix fi = gather_columns(
          ws, state.class_columns[static_cast<std::size_t>(i)]);
      for (int j = i + 1; j < state.num_classes; ++j) {
        const Matrix fj = gather_columns(
            ws, state.class_columns[static_cast<std::size_t>(j)]);
        // (i, j) and (j, i) contribute the same Frobenius norm.
        incoherence += 2.0 * (fi.transpose() * fj).squaredNorm();
      }
    }
    value += params.beta * incoherence;
  }
  if (params.gamma != 0.0) {
    value += params.gamma * (ws * state.L).cwiseProduct(ws).sum();
  }
  if (!std::isfinite(value)) {
    throw numeric_error("objective: non-finite value");
  }
  return value;
}

std::pair<TrainedModel, ConvergenceTrace> train(const Dataset& train_set,
                                                const HyperParams& params) {
  TrainerState st = init_state(train_set, params);
  ConvergenceTrace trace;
  trace.reserve(static_cast<std::size_t>(params.max_iter));

  bool converged = false;
  double res_p = 0.0, res_j = 0.0;
  int it = 0;
  while (it < params.max_iter) {
    ++it;
    st.S = update_S(st, params);
    st.W = update_W(st, params);
    st.P = update_P(st, params);
    st.J = update_J(st, params);
    st.D = update_D(st, params);
    update_multipliers(st, params);
    auto [done, res] = check_convergence(st, params);
    res_p = res.first;
    res_j = res.second;
    trace.push_back({it, objective(st, params), res_p, res_j,
                     st.S.minCoeff()});
    if (done) {
      converged = true;
      break;
    }
  }

  TrainedModel model;
  model.D = std::move(st.D);
  model.W = std::move(st.W);
  model.params = params;
  model.iterations = it;
  model.residual_p = res_p;
  model.residual_j = res_j;
  model.converged = converged;
  return {std::move(model), std::move(trace)};
}

}  // namespace nrdl
