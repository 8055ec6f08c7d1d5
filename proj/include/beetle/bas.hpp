#pragma once

#include <optional>

#include "beetle/antenna.hpp"
#include "beetle/problem.hpp"
#include "beetle/rng.hpp"
#include "beetle/run_record.hpp"

namespace beetle {

/// Single-beetle antennae search. Schedule values are in normalized [0,1]^n units.
struct BasConfig {
  ScheduleState schedule;
  StoppingRule stopping;
  SignConvention sign_convention = SignConvention::toward_better;
  /// Physical starting point; drawn uniformly in the box from the run's stream when absent.
  std::optional<Vector> initial_position;
  bool record_trace = false;

  void validate() const;
};

struct BasStep {
  BeetleIncumbent incumbent;
  ScheduleState schedule;
  IterationTrace info;
};

/// One BAS iteration along a given unit direction `b`. Probes and the moved
/// position are clamped to the problem's box; the move and the schedule
/// update happen unconditionally.
BasStep bas_step(const BeetleIncumbent& incumbent, const ScheduleState& schedule, const SearchProblem& problem,
                 const Vector& b, SignConvention convention = SignConvention::toward_better);

/// As above, drawing `b` from `rng`.
BasStep bas_step(const BeetleIncumbent& incumbent, const ScheduleState& schedule, const SearchProblem& problem,
                 RngStream& rng, SignConvention convention = SignConvention::toward_better);

/// Runs BAS in normalized coordinates of `problem` until the stopping rule fires.
/// Objective exceptions surface as RunFailure carrying the partial record.
RunRecord run_bas(const SearchProblem& problem, const BasConfig& config, std::uint64_t seed);

}  // namespace beetle
