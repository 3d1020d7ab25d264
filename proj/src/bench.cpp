#include "nrdl/bench.hpp"

#include <cmath>
#include <fstream>

#include "nrdl/model_io.hpp"
#include "nrdl/rng.hpp"

namespace nrdl {

Dataset make_synthetic(const SyntheticSpec& spec) {
  if (spec.num_classes < 1 || spec.samples_per_class < 1 || spec.dim < 1) {
    throw data_error("synthetic spec: counts must be positive");
  }
  if (!(spec.separation > 0.0)) {
    throw data_error("synthetic spec: separation must be positive");
  }
  if (spec.noise_scale < 0.0) {
    throw data_error("synthetic spec: noise scale must be non-negative");
  }
  if (static_cast<Index>(spec.num_classes) > spec.dim) {
    throw data_error("synthetic spec: need dim >= num_classes");
  }

  const Index n =
      static_cast<Index>(spec.num_classes) * spec.samples_per_class;
  Dataset ds;
  ds.samples.resize(spec.dim, n);
  ds.labels.reserve(static_cast<std::size_t>(n));
  ds.num_classes = spec.num_classes;

  // Scaled basis vectors as means: any two sit exactly `separation` apart.
  const double mean_height = spec.separation / std::sqrt(2.0);
  Rng rng(spec.seed);
  Index col = 0;
  for (int c = 0; c < spec.num_classes; ++c) {
    for (int s = 0; s < spec.samples_per_class; ++s, ++col) {
      for (Index r = 0; r < spec.dim; ++r) {
        const double mean = (r == static_cast<Index>(c)) ? mean_height : 0.0;
        ds.samples(r, col) = mean + spec.noise_scale * rng.gaussian();
      }
      ds.labels.push_back(c);
    }
  }

  const double lo = ds.samples.minCoeff();
  const double hi = ds.samples.maxCoeff();
  if (hi - lo < 1e-12) {
    ds.samples.setConstant(0.5);
  } else {
    ds.samples = (ds.samples.array() - lo) / (hi - lo);
  }
  return ds;
}

namespace {

RepeatResult run_repeat(const Dataset& ds, const ExperimentConfig& config,
                        int repeat) {
  auto [train_set, test_set] =
      split_per_class(ds, config.n_train_per_class,
                      config.split_seed + static_cast<std::uint64_t>(repeat));
  HyperParams hyper = config.hyper;
  hyper.init_seed += static_cast<std::uint64_t>(repeat);
  auto [model, trace] = train(train_set, hyper);
  const EvalResult eval =
      evaluate(model, test_set, config.coder, config.coder_params);
  return {repeat, config.split_seed + static_cast<std::uint64_t>(repeat),
          eval.accuracy, model.iterations, model.converged};
}

BenchSummary summarize(std::vector<RepeatResult> repeats) {
  BenchSummary summary;
  double sum = 0.0;
  for (const auto& r : repeats) sum += r.accuracy;
  const double n = static_cast<double>(repeats.size());
  summary.mean_accuracy = sum / n;
  double sq = 0.0;
  for (const auto& r : repeats) {
    const double d = r.accuracy - summary.mean_accuracy;
    sq += d * d;
  }
  summary.std_accuracy = std::sqrt(sq / n);
  summary.repeats = std::move(repeats);
  return summary;
}

}  // namespace

BenchSummary run_benchmark(const Dataset& ds, const ExperimentConfig& config) {
  if (config.num_repeats < 1) {
    throw data_error("num_repeats must be at least 1");
  }
  std::vector<RepeatResult> repeats;
  repeats.reserve(static_cast<std::size_t>(config.num_repeats));
  for (int r = 0; r < config.num_repeats; ++r) {
    repeats.push_back(run_repeat(ds, config, r));
  }
  return summarize(std::move(repeats));
}

std::vector<SweepEntry> run_noise_sweep(const Dataset& ds,
                                        const ExperimentConfig& config) {
  if (config.num_repeats < 1) {
    throw data_error("num_repeats must be at least 1");
  }
  if (config.noise_densities.empty()) {
    throw data_error("noise sweep needs at least one density");
  }
  for (double d : config.noise_densities) {
    if (!(d >= 0.0 && d <= 1.0)) {
      throw data_error("noise density must lie in [0, 1]");
    }
  }
  std::vector<SweepEntry> sweep;
  for (double density : config.noise_densities) {
    std::vector<RepeatResult> repeats;
    repeats.reserve(static_cast<std::size_t>(config.num_repeats));
    for (int r = 0; r < config.num_repeats; ++r) {
      Dataset corrupted = ds;
      corrupted.samples = add_salt_pepper(
          ds.samples, density,
          config.noise_seed + static_cast<std::uint64_t>(r));
      repeats.push_back(run_repeat(corrupted, config, r));
    }
    sweep.push_back({density, summarize(std::move(repeats))});
  }
  return sweep;
}

void write_repeats_csv(const BenchSummary& summary, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write repeats file: " + path);
  out << "repeat,split_seed,accuracy,iterations,converged\n";
  for (const auto& r : summary.repeats) {
    out << r.repeat << ',' << r.split_seed << ',' << format_real(r.accuracy)
        << ',' << r.iterations << ',' << (r.converged ? 1 : 0) << '\n';
  }
}

void write_sweep_csv(const std::vector<SweepEntry>& sweep,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write sweep file: " + path);
  out << "density,mean_accuracy,std_accuracy\n";
  for (const auto& entry : sweep) {
    out << format_real(entry.density) << ','
        << format_real(entry.summary.mean_accuracy) << ','
        << format_real(entry.summary.std_accuracy) << '\n';
  }
}

void write_dataset(const Dataset& ds, const std::string& samples_path,
                   const std::string& labels_path) {
  std::ofstream sf(samples_path, std::ios::binary);
  if (!sf) throw data_error("cannot write samples file: " + samples_path);
  for (Index i = 0; i < ds.size(); ++i) {
    for (Index r = 0; r < ds.dim(); ++r) {
      if (r) sf << ',';
      sf << format_real(ds.samples(r, i));
    }
    sf << '\n';
  }
  std::ofstream lf(labels_path, std::ios::binary);
  if (!lf) throw data_error("cannot write labels file: " + labels_path);
  for (int l : ds.labels) lf << l << '\n';
}

}  // namespace nrdl
