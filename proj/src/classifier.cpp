#include "nrdl/classifier.hpp"

#include <fstream>
#include <memory>

namespace nrdl {

namespace {

int argmax_lowest(const Vector& f) {
  int best = 0;
  for (Index i = 1; i < f.size(); ++i) {
    if (f(i) > f(best)) best = static_cast<int>(i);
  }
  return best;
}

Vector normalized_sample(const TrainedModel& model, const Vector& x) {
  if (x.size() != model.dim()) {
    throw data_error("classify: sample has " + std::to_string(x.size()) +
                     " entries, model expects " + std::to_string(model.dim()));
  }
  const double norm = x.norm();
  if (norm < 1e-150) throw data_error("classify: zero vector");
  return x / norm;
}

// Shares one dictionary factorization across a batch.
struct Coder {
  std::unique_ptr<NnlsSolver> nnls;
  std::unique_ptr<RidgeSolver> ridge;

  Coder(const TrainedModel& model, CoderKind kind, const CoderParams& params) {
    if (kind == CoderKind::nnls) {
      nnls = std::make_unique<NnlsSolver>(model.D, params.nnls);
    } else {
      ridge = std::make_unique<RidgeSolver>(model.D, params.ridge_reg);
    }
  }

  Vector code(const Vector& y) const {
    return nnls ? nnls->solve(y) : ridge->solve(y);
  }
};

Prediction predict_one(const TrainedModel& model, const Coder& coder,
                       const Vector& x) {
  Prediction pred;
  pred.code = coder.code(normalized_sample(model, x));
  pred.scores = model.W * pred.code;
  pred.label = argmax_lowest(pred.scores);
  return pred;
}

}  // namespace

Prediction classify(const TrainedModel& model, const Vector& x,
                    CoderKind coder, const CoderParams& params) {
  return predict_one(model, Coder(model, coder, params), x);
}

EvalResult evaluate(const TrainedModel& model, const Dataset& test,
                    CoderKind coder, const CoderParams& params) {
  if (test.size() == 0) throw data_error("empty test set");
  if (test.dim() != model.dim()) {
    throw data_error("evaluate: test dimension " + std::to_string(test.dim()) +
                     " does not match model dimension " +
                     std::to_string(model.dim()));
  }
  const Coder shared(model, coder, params);
  EvalResult result;
  result.predictions.reserve(static_cast<std::size_t>(test.size()));
  result.true_labels = test.labels;
  result.confusion = Matrix::Zero(model.classes(), model.classes());
  Index correct = 0;
  for (Index i = 0; i < test.size(); ++i) {
    Prediction pred = predict_one(model, shared, test.samples.col(i));
    const int truth = test.labels[static_cast<std::size_t>(i)];
    if (truth < model.classes()) {
      result.confusion(truth, pred.label) += 1.0;
    }
    if (pred.label == truth) ++correct;
    result.predictions.push_back(std::move(pred));
  }
  result.accuracy =
      static_cast<double>(correct) / static_cast<double>(test.size());
  return result;
}

void write_predictions_csv(const EvalResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write predictions file: " + path);
  out << "sample_index,true_label,pred_label\n";
  Index correct = 0;
  for (std::size_t i = 0; i < result.predictions.size(); ++i) {
    const int truth = result.true_labels[i];
    const int pred = result.predictions[i].label;
    if (truth == pred) ++correct;
    out << i << "," << truth << "," << pred << "\n";
  }
  out << "# accuracy " << result.accuracy << " (" << correct << "/"
      << result.predictions.size() << ")\n";
}

}  // namespace nrdl
