// Command-line front end: train, classify, bench, noise-sweep, synth, trace.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrdl/bench.hpp"
#include "nrdl/classifier.hpp"
#include "nrdl/dataset.hpp"
#include "nrdl/model_io.hpp"
#include "nrdl/trainer.hpp"

namespace {

struct CommonOpts {
  std::string samples_path;
  std::string labels_path;
  nrdl::HyperParams hyper;
  std::uint64_t seed = 0;
  std::string coder = "nnls";
  double ridge_reg = 1e-3;
  double nnls_rho = 1.0;
  double nnls_tol = 1e-8;
  int nnls_max_iter = 1000;
};

void add_data_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--samples", opts.samples_path, "Samples CSV, one per row")
      ->required();
  cmd->add_option("--labels", opts.labels_path, "Labels file, one per line")
      ->required();
}

void add_hyper_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--lambda", opts.hyper.lambda, "Off-block penalty weight");
  cmd->add_option("--alpha", opts.hyper.alpha, "Classification error weight");
  cmd->add_option("--beta", opts.hyper.beta, "Incoherence weight");
  cmd->add_option("--gamma", opts.hyper.gamma, "Graph regularizer weight");
  cmd->add_option("--mu", opts.hyper.mu, "Augmented-Lagrangian penalty");
  cmd->add_option("--tol", opts.hyper.tol, "Convergence threshold");
  cmd->add_option("--max-iter", opts.hyper.max_iter, "Iteration cap");
  cmd->add_option("--jitter", opts.hyper.jitter, "Inversion jitter");
  cmd->add_option("--dict-size", opts.hyper.dict_size,
                  "Atoms K (0 = one per training sample)");
  cmd->add_flag("--legacy-p-update", opts.hyper.legacy_p_update,
                "Use the P update without the 2*beta factor");
  cmd->add_option("--seed", opts.seed,
                  "Base seed for splits, noise, and initialization");
}

void add_coder_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--coder", opts.coder, "Test-time coder")
      ->check(CLI::IsMember({"nnls", "ridge"}));
  cmd->add_option("--ridge-reg", opts.ridge_reg, "Ridge coder regularizer");
  cmd->add_option("--rho", opts.nnls_rho, "NNLS splitting penalty");
  cmd->add_option("--nnls-tol", opts.nnls_tol, "NNLS residual tolerance");
  cmd->add_option("--nnls-max-iter", opts.nnls_max_iter, "NNLS iteration cap");
}

nrdl::CoderKind coder_kind(const CommonOpts& opts) {
  return opts.coder == "ridge" ? nrdl::CoderKind::ridge
                               : nrdl::CoderKind::nnls;
}

nrdl::CoderParams coder_params(const CommonOpts& opts) {
  nrdl::CoderParams params;
  params.ridge_reg = opts.ridge_reg;
  params.nnls.rho = opts.nnls_rho;
  params.nnls.tol = opts.nnls_tol;
  params.nnls.max_iter = opts.nnls_max_iter;
  return params;
}

std::vector<double> parse_densities(const std::string& csv) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const auto comma = csv.find(',', pos);
    const std::string tok =
        csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dictionary + linear classifier training with non-negative "
               "codes, and the matching benchmark harness"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string out_path, trace_out, model_out, model_path, detail_out;
  int train_per_class = 1;
  int repeats = 10;
  std::string densities_csv = "0.01,0.02,0.03";
  nrdl::SyntheticSpec synth_spec;

  auto* cmd_train = app.add_subcommand("train", "Train on a full dataset");
  add_data_flags(cmd_train, opts);
  add_hyper_flags(cmd_train, opts);
  cmd_train->add_option("--out", out_path, "Model file")->required();
  cmd_train->add_option("--trace-out", trace_out, "Convergence trace CSV");

  auto* cmd_classify =
      app.add_subcommand("classify", "Classify samples with a trained model");
  cmd_classify->add_option("--model", model_path, "Model file")->required();
  add_data_flags(cmd_classify, opts);
  add_coder_flags(cmd_classify, opts);
  cmd_classify->add_option("--out", out_path, "Predictions CSV")->required();

  auto* cmd_bench = app.add_subcommand(
      "bench", "Repeated random-split accuracy benchmark");
  add_data_flags(cmd_bench, opts);
  add_hyper_flags(cmd_bench, opts);
  add_coder_flags(cmd_bench, opts);
  cmd_bench->add_option("--train-per-class", train_per_class,
                        "Training samples per class")->required();
  cmd_bench->add_option("--repeats", repeats, "Number of random splits");
  cmd_bench->add_option("--out", out_path, "Per-repeat CSV")->required();

  auto* cmd_sweep = app.add_subcommand(
      "noise-sweep", "Benchmark under salt-and-pepper corruption");
  add_data_flags(cmd_sweep, opts);
  add_hyper_flags(cmd_sweep, opts);
  add_coder_flags(cmd_sweep, opts);
  cmd_sweep->add_option("--train-per-class", train_per_class,
                        "Training samples per class")->required();
  cmd_sweep->add_option("--repeats", repeats, "Number of random splits");
  cmd_sweep->add_option("--densities", densities_csv,
                        "Comma-separated noise densities");
  cmd_sweep->add_option("--out", out_path, "Per-density summary CSV")
      ->required();
  cmd_sweep->add_option("--detail-out", detail_out,
                        "Prefix for per-density repeat CSVs");

  auto* cmd_synth =
      app.add_subcommand("synth", "Generate a synthetic dataset");
  cmd_synth->add_option("--classes", synth_spec.num_classes, "Class count");
  cmd_synth->add_option("--per-class", synth_spec.samples_per_class,
                        "Samples per class");
  cmd_synth->add_option("--dim", synth_spec.dim, "Sample dimension");
  cmd_synth->add_option("--separation", synth_spec.separation,
                        "Distance between class means");
  cmd_synth->add_option("--noise", synth_spec.noise_scale,
                        "Within-class spread");
  cmd_synth->add_option("--seed", synth_spec.seed, "Generator seed");
  cmd_synth
      ->add_option("--out", out_path,
                   "Output prefix (<out>_samples.csv, <out>_labels.txt)")
      ->required();

  auto* cmd_trace = app.add_subcommand(
      "trace", "Train once and emit the convergence trace");
  add_data_flags(cmd_trace, opts);
  add_hyper_flags(cmd_trace, opts);
  cmd_trace->add_option("--out", out_path, "Trace CSV")->required();
  cmd_trace->add_option("--model-out", model_out, "Optional model file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    opts.hyper.init_seed = opts.seed;

    if (*cmd_train) {
      const nrdl::Dataset ds =
          nrdl::load_dataset(opts.samples_path, opts.labels_path);
      auto [model, trace] = nrdl::train(ds, opts.hyper);
      nrdl::save_model(model, out_path);
      if (!trace_out.empty()) nrdl::write_trace_csv(trace, trace_out);
      std::cout << "trained " << model.dim() << "x" << model.atoms()
                << " dictionary, " << model.classes() << " classes, "
                << model.iterations << " iterations, "
                << (model.converged ? "converged" : "not converged")
                << " (residuals " << model.residual_p << ", "
                << model.residual_j << ")\n";
    } else if (*cmd_classify) {
      const nrdl::TrainedModel model = nrdl::load_model(model_path);
      const nrdl::Dataset ds =
          nrdl::load_dataset(opts.samples_path, opts.labels_path);
      const nrdl::EvalResult eval =
          nrdl::evaluate(model, ds, coder_kind(opts), coder_params(opts));
      nrdl::write_predictions_csv(eval, out_path);
      std::cout << "accuracy " << eval.accuracy << " on " << ds.size()
                << " samples\n";
    } else if (*cmd_bench) {
      const nrdl::Dataset ds =
          nrdl::load_dataset(opts.samples_path, opts.labels_path);
      nrdl::ExperimentConfig config;
      config.n_train_per_class = train_per_class;
      config.num_repeats = repeats;
      config.split_seed = opts.seed;
      config.noise_seed = opts.seed + 1000003;
      config.hyper = opts.hyper;
      config.coder = coder_kind(opts);
      config.coder_params = coder_params(opts);
      const nrdl::BenchSummary summary = nrdl::run_benchmark(ds, config);
      nrdl::write_repeats_csv(summary, out_path);
      std::cout << "mean accuracy " << summary.mean_accuracy << " +- "
                << summary.std_accuracy << " over " << repeats
                << " repeats\n";
    } else if (*cmd_sweep) {
      const nrdl::Dataset ds =
          nrdl::load_dataset(opts.samples_path, opts.labels_path);
      nrdl::ExperimentConfig config;
      config.n_train_per_class = train_per_class;
      config.num_repeats = repeats;
      config.split_seed = opts.seed;
      config.noise_seed = opts.seed + 1000003;
      config.hyper = opts.hyper;
      config.coder = coder_kind(opts);
      config.coder_params = coder_params(opts);
      config.noise_densities = parse_densities(densities_csv);
      const auto sweep = nrdl::run_noise_sweep(ds, config);
      nrdl::write_sweep_csv(sweep, out_path);
      for (const auto& entry : sweep) {
        if (!detail_out.empty()) {
          char buf[32];
          std::snprintf(buf, sizeof(buf), "%g", entry.density);
          nrdl::write_repeats_csv(entry.summary,
                                  detail_out + "_density" + buf + ".csv");
        }
        std::cout << "density " << entry.density << ": mean accuracy "
                  << entry.summary.mean_accuracy << " +- "
                  << entry.summary.std_accuracy << "\n";
      }
    } else if (*cmd_synth) {
      const nrdl::Dataset ds = nrdl::make_synthetic(synth_spec);
      nrdl::write_dataset(ds, out_path + "_samples.csv",
                          out_path + "_labels.txt");
      std::cout << "wrote " << ds.size() << " samples of dimension "
                << ds.dim() << " in " << ds.num_classes << " classes\n";
    } else if (*cmd_trace) {
      const nrdl::Dataset ds =
          nrdl::load_dataset(opts.samples_path, opts.labels_path);
      auto [model, trace] = nrdl::train(ds, opts.hyper);
      nrdl::write_trace_csv(trace, out_path);
      if (!model_out.empty()) nrdl::save_model(model, model_out);
      std::cout << trace.size() << " iterations, final residuals "
                << model.residual_p << ", " << model.residual_j << "\n";
    }
  } catch (const nrdl::data_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nrdl::numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
