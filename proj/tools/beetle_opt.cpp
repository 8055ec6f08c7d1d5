// beetle-opt: run BAS/BSAS experiments, generate synthetic RC datasets,
// and summarize trial tables.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 runtime failure.

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "beetle/config.hpp"
#include "beetle/dataset_io.hpp"
#include "beetle/experiment.hpp"
#include "beetle/text_io.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

int cmd_run(const std::string& config_path, const std::string& out_dir, std::optional<int> workers,
            std::optional<std::uint64_t> seed) {
  beetle::ExperimentConfig config = beetle::load_config(config_path);
  if (workers) config.experiment.workers = *workers;
  if (seed) config.experiment.base_seed = *seed;
  config.validate();

  const beetle::ExperimentReport report = beetle::run_experiment(config);
  beetle::write_outputs(report, out_dir);

  for (const auto& v : report.summary.variants) {
    std::cout << beetle::to_string(v.variant.algorithm) << " k=" << v.variant.k << "  mean=" << v.mean
              << "  sd=" << v.sd << "  min=" << v.min << "  max=" << v.max;
    if (v.failures) std::cout << "  failures=" << v.failures;
    std::cout << '\n';
  }
  std::cout << "wrote " << out_dir << '\n';
  return 0;
}

int cmd_gen_data(const std::string& config_path, const std::string& out_file) {
  const beetle::ExperimentConfig config = beetle::load_config(config_path);
  if (config.problem.kind != beetle::ProblemKind::rc || config.problem.dataset)
    throw beetle::ConfigError("gen-data needs an rc problem with truth/synthetic settings (no dataset path)");
  const auto dataset = beetle::rc::generate_synthetic_dataset(config.problem.truth, config.problem.synthetic);
  beetle::rc::write_dataset(dataset, out_file);
  std::cout << "wrote " << dataset.size() << " samples to " << out_file << '\n';
  return 0;
}

int cmd_summarize(const std::string& trials_path, const std::string& out_file, int bins) {
  if (bins < 1) throw beetle::ConfigError("--bins must be positive");
  const auto records = beetle::trials_from_csv(beetle::io::read_file(trials_path));
  const auto summary = beetle::summarize(records, bins);
  beetle::io::write_file(out_file, beetle::to_json(summary).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beetle antennae search experiments"};
  app.require_subcommand(1);

  std::string config_path, out_path, trials_path;
  std::optional<int> workers;
  std::optional<std::uint64_t> seed;
  int bins = 15;

  auto* run = app.add_subcommand("run", "Run every configured variant for the configured number of trials");
  run->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_path, "Output directory")->required();
  run->add_option("--workers", workers, "Concurrent trials");
  run->add_option("--seed", seed, "Base seed (trial i uses seed + i)");

  auto* gen = app.add_subcommand("gen-data", "Generate a synthetic RC dataset");
  gen->add_option("--config", config_path, "Config with an rc problem section")->required()->check(CLI::ExistingFile);
  gen->add_option("--out", out_path, "Output CSV; metadata goes to <out>.meta.json")->required();

  auto* sum = app.add_subcommand("summarize", "Recompute summary statistics from trials.csv");
  sum->add_option("--trials", trials_path, "trials.csv")->required()->check(CLI::ExistingFile);
  sum->add_option("--out", out_path, "Output JSON")->required();
  sum->add_option("--bins", bins, "Histogram bin count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*run) return cmd_run(config_path, out_path, workers, seed);
    if (*gen) return cmd_gen_data(config_path, out_path);
    if (*sum) return cmd_summarize(trials_path, out_path, bins);
  } catch (const beetle::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}
