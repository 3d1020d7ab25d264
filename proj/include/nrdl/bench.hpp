#ifndef NRDL_BENCH_HPP_
#define NRDL_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "nrdl/classifier.hpp"
#include "nrdl/dataset.hpp"
#include "nrdl/trainer.hpp"

namespace nrdl {

struct SyntheticSpec {
  int num_classes = 3;
  int samples_per_class = 30;
  Index dim = 20;
  double separation = 5.0;   // pairwise distance between class means
  double noise_scale = 1.0;  // within-class gaussian spread
  std::uint64_t seed = 0;
};

// Gaussian blobs around class means at pairwise distance `separation`,
// rescaled into [0, 1] so noise sweeps apply directly. Class-blocked order,
// deterministic per seed.
Dataset make_synthetic(const SyntheticSpec& spec);

struct ExperimentConfig {
  int n_train_per_class = 1;
  int num_repeats = 10;
  std::uint64_t split_seed = 0;  // repeat r splits with split_seed + r
  std::uint64_t noise_seed = 0;  // repeat r corrupts with noise_seed + r
  HyperParams hyper;             // repeat r trains with init_seed + r
  CoderKind coder = CoderKind::nnls;
  CoderParams coder_params;
  std::vector<double> noise_densities;  // noise sweeps only
};

struct RepeatResult {
  int repeat = 0;
  std::uint64_t split_seed = 0;
  double accuracy = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct BenchSummary {
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // population std over repeats
  std::vector<RepeatResult> repeats;
};

struct SweepEntry {
  double density = 0.0;
  BenchSummary summary;
};

// Repeated random-split protocol: split per class, train, evaluate; mean and
// std over repeats.
BenchSummary run_benchmark(const Dataset& ds, const ExperimentConfig& config);

// The same protocol with every sample (train and test alike) corrupted at
// each listed density before splitting. Density 0 reproduces run_benchmark
// bit-for-bit under equal seeds.
std::vector<SweepEntry> run_noise_sweep(const Dataset& ds,
                                        const ExperimentConfig& config);

// CSV artifacts. Repeats: `repeat,split_seed,accuracy,iterations,converged`.
// Sweep: `density,mean_accuracy,std_accuracy`.
void write_repeats_csv(const BenchSummary& summary, const std::string& path);
void write_sweep_csv(const std::vector<SweepEntry>& sweep,
                     const std::string& path);

// Samples CSV (one sample per row, no header) + labels file, the loader's
// input format.
void write_dataset(const Dataset& ds, const std::string& samples_path,
                   const std::string& labels_path);

}  // namespace nrdl

#endif  // NRDL_BENCH_HPP_
