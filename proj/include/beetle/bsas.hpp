#pragma once

#include <optional>

#include <Eigen/Core>

#include "beetle/antenna.hpp"
#include "beetle/problem.hpp"
#include "beetle/rng.hpp"
#include "beetle/run_record.hpp"

namespace beetle {

/// How each beetle turns its two antenna readings into one candidate position.
enum class CandidateRule {
  detect_step,   // x - delta*b*sign(f_r - f_l)
  best_antenna,  // the lower-valued antenna tip itself
};

struct BsasConfig {
  int k = 5;
  double p_delta = 0.2;
  ScheduleState schedule;
  StoppingRule stopping;
  SignConvention sign_convention = SignConvention::toward_better;
  CandidateRule candidate_rule = CandidateRule::detect_step;
  std::optional<Vector> initial_position;  // physical; uniform in the box when absent
  bool record_trace = false;

  void validate() const;
};

struct BsasStep {
  BeetleIncumbent incumbent;
  ScheduleState schedule;
  bool improved = false;
  IterationTrace info;
};

/// One swarm iteration with explicit directions (one unit vector per column).
/// The position moves only when the best candidate strictly beats f_best;
/// otherwise one uniform draw from `rng` decides whether the schedule shrinks
/// (draw > p_delta) or stays.
BsasStep bsas_iteration(const BeetleIncumbent& incumbent, const ScheduleState& schedule, const BsasConfig& config,
                        const SearchProblem& problem, const Eigen::MatrixXd& directions, RngStream& rng);

/// As above, drawing config.k directions from `rng` first.
BsasStep bsas_iteration(const BeetleIncumbent& incumbent, const ScheduleState& schedule, const BsasConfig& config,
                        const SearchProblem& problem, RngStream& rng);

RunRecord run_bsas(const SearchProblem& problem, const BsasConfig& config, std::uint64_t seed);

}  // namespace beetle
