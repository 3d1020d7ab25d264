#ifndef NRDL_CLASSIFIER_HPP_
#define NRDL_CLASSIFIER_HPP_

#include <string>
#include <vector>

#include "nrdl/coders.hpp"
#include "nrdl/dataset.hpp"
#include "nrdl/trainer.hpp"

namespace nrdl {

enum class CoderKind { nnls, ridge };

struct CoderParams {
  NnlsParams nnls;
  double ridge_reg = 1e-3;
};

struct Prediction {
  int label = 0;
  Vector scores;  // f = W eta, length C
  Vector code;    // eta, length K
};

struct EvalResult {
  std::vector<Prediction> predictions;
  std::vector<int> true_labels;
  double accuracy = 0.0;
  Matrix confusion;  // C x C counts, row = true class, col = predicted
};

// Normalizes x to unit norm, codes it over the model dictionary (nnls or
// ridge), projects with the classifier and takes the argmax score. Ties
// break to the lowest class index.
Prediction classify(const TrainedModel& model, const Vector& x,
                    CoderKind coder, const CoderParams& params = {});

// Batch evaluation; the dictionary factorization is built once and shared
// across all test samples.
EvalResult evaluate(const TrainedModel& model, const Dataset& test,
                    CoderKind coder, const CoderParams& params = {});

// CSV rows `sample_index,true_label,pred_label` plus a trailing summary line.
void write_predictions_csv(const EvalResult& result, const std::string& path);

}  // namespace nrdl

#endif  // NRDL_CLASSIFIER_HPP_
