#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "beetle/config.hpp"
#include "beetle/problem.hpp"
#include "beetle/run_record.hpp"

namespace beetle {

/// Statistics of f_best_final for one (algorithm, k) group. Failed trials
/// (written as nan in trials.csv) are excluded and counted separately.
struct VariantSummary {
  Variant variant;
  int trials = 0;
  int failures = 0;
  double mean = 0;
  double sd = 0;  // population standard deviation
  double min = 0;
  double max = 0;
  std::vector<int> histogram;
};

/// Equal-width bins shared by every variant, spanning [global min, global max].
struct Summary {
  int bin_count = 0;
  std::vector<double> bin_edges;  // bin_count + 1 entries
  std::vector<VariantSummary> variants;
};

struct ExperimentReport {
  std::vector<Variant> variants;
  std::vector<std::vector<RunRecord>> trials;  // trials[v][i] uses seed base_seed + i
  Summary summary;
  nlohmann::json config_snapshot;
  std::string dataset_id;
};

/// Problem plus a short identifier of its data source.
struct BuiltProblem {
  SearchProblem problem;
  std::string dataset_id;
};

BuiltProblem build_problem(const ExperimentConfig& config);

/// Single trial. Objective failures come back as a record with `failure` set.
RunRecord run_trial(const SearchProblem& problem, const ExperimentConfig& config, const Variant& variant,
                    std::uint64_t seed);

ExperimentReport run_experiment(const ExperimentConfig& config);

/// Groups records by (algorithm, k) in order of first appearance.
Summary summarize(const std::vector<RunRecord>& records, int bin_count);

nlohmann::json to_json(const Summary& summary);
Summary summary_from_json(const nlohmann::json& j);

inline constexpr const char* kTrialsHeader = "algorithm,k,seed,f_best,iterations,evaluations,wall_time_ms";

std::string trials_csv(const ExperimentReport& report);
std::vector<RunRecord> trials_from_csv(std::string_view text);

/// Writes trials.csv, summary.json and config_snapshot.json into `out_dir`
/// (created if missing). Output is byte-stable for a given report.
void write_outputs(const ExperimentReport& report, const std::filesystem::path& out_dir);

}  // namespace beetle
