#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "beetle/antenna.hpp"
#include "beetle/bsas.hpp"
#include "beetle/rc_model.hpp"
#include "beetle/run_record.hpp"

namespace beetle {

/// Malformed or inconsistent configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ProblemKind { goldstein_price, michalewicz, sphere, rc };

struct ProblemConfig {
  ProblemKind kind = ProblemKind::goldstein_price;
  int dimension = 2;  // michalewicz and sphere
  double michalewicz_m = 10;
  double sphere_lower = -1;
  double sphere_upper = 1;

  // rc only. Either `dataset` names a CSV (relative paths resolve against the
  // config file), or a dataset is generated from `truth` and `synthetic`.
  std::optional<std::string> dataset;
  rc::RcParameters truth;
  rc::SyntheticSpec synthetic;
  std::optional<rc::RcParameters> center;  // bounds center; defaults to the dataset truth
  double temperature_band = 5;
  double multiplicative_band = 0.5;
  double penalty = rc::kDefaultPenalty;
};

struct Variant {
  Algorithm algorithm = Algorithm::bsas;
  int k = 1;

  friend bool operator==(const Variant&, const Variant&) = default;
};

struct AlgorithmConfig {
  std::vector<Variant> variants{{Algorithm::bas, 1},  {Algorithm::bsas, 1}, {Algorithm::bsas, 2},
                                {Algorithm::bsas, 3}, {Algorithm::bsas, 4}, {Algorithm::bsas, 5}};
  double p_delta = 0.2;
  SignConvention sign_convention = SignConvention::toward_better;
  CandidateRule candidate_rule = CandidateRule::detect_step;
};

struct ExperimentSettings {
  int trials = 50;
  std::uint64_t base_seed = 1;
  int workers = 1;
  int bin_count = 15;
  std::optional<Vector> initial_position;  // physical; random per trial when absent
};

struct ExperimentConfig {
  ProblemConfig problem;
  AlgorithmConfig algorithm;
  ScheduleState schedule;
  StoppingRule stopping;
  ExperimentSettings experiment;
  std::filesystem::path base_dir = ".";  // for relative dataset paths

  void validate() const;
};

/// Strict parse: unknown sections or keys raise ConfigError. Omitted keys keep
/// their defaults, except schedule.d which defaults to schedule.delta.
ExperimentConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Fully resolved configuration, every field spelled out.
nlohmann::json to_json(const ExperimentConfig& config);

nlohmann::json to_json(const rc::RcParameters& p);
rc::RcParameters rc_parameters_from_json(const nlohmann::json& j);
nlohmann::json to_json(const rc::SyntheticSpec& s);
rc::SyntheticSpec synthetic_spec_from_json(const nlohmann::json& j);

std::string_view to_string(ProblemKind kind);
std::string_view to_string(SignConvention c);
std::string_view to_string(CandidateRule r);

}  // namespace beetle
