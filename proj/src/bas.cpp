#include "beetle/bas.hpp"

#include <limits>

#include "run_support.hpp"

namespace beetle {

void BasConfig::validate() const {
  schedule.validate();
  stopping.validate();
  if (!(schedule.delta > stopping.delta_criterion))
    throw std::invalid_argument("bas: initial delta must exceed delta_criterion");
}

BasStep bas_step(const BeetleIncumbent& incumbent, const ScheduleState& schedule, const SearchProblem& problem,
                 const Vector& b, SignConvention convention) {
  require_dimension(problem, incumbent.x.size(), "bas_step");
  require_dimension(problem, b.size(), "bas_step direction");

  BasStep out{incumbent, update_schedule(schedule), {}};
  auto [x_r, x_l] = antenna_probes(incumbent.x, schedule.d, b);
  const double f_r = problem.evaluate(clamp_to_bounds(x_r, problem));
  const double f_l = problem.evaluate(clamp_to_bounds(x_l, problem));
  out.info.evaluations = 2;

  Vector moved = clamp_to_bounds(detect_step(incumbent.x, schedule.delta, b, f_r, f_l, convention), problem);
  if (moved == incumbent.x) {
    out.info.stationary_candidates = 1;
  } else {
    out.incumbent.f_x = problem.evaluate(moved);
    out.incumbent.x = std::move(moved);
    out.info.evaluations += 1;
    out.info.position_changed = true;
  }

  if (out.incumbent.f_x < out.incumbent.f_best) {
    out.incumbent.f_best = out.incumbent.f_x;
    out.incumbent.x_best = out.incumbent.x;
    out.info.improved = true;
  }
  out.info.schedule_updated = true;
  out.info.f_best = out.incumbent.f_best;
  out.info.d = out.schedule.d;
  out.info.delta = out.schedule.delta;
  return out;
}

BasStep bas_step(const BeetleIncumbent& incumbent, const ScheduleState& schedule, const SearchProblem& problem,
                 RngStream& rng, SignConvention convention) {
  const Vector b = sample_unit_direction(rng, problem.dimension());
  return bas_step(incumbent, schedule, problem, b, convention);
}

RunRecord run_bas(const SearchProblem& problem, const BasConfig& config, std::uint64_t seed) {
  config.validate();
  const detail::Stopwatch clock;
  RngStream rng(seed);
  const SearchProblem unit = unit_box_view(problem);

  RunRecord record;
  record.algorithm = Algorithm::bas;
  record.k = 1;
  record.seed = seed;

  BeetleIncumbent incumbent;
  incumbent.x = detail::initial_unit_position(config.initial_position, problem, rng);
  try {
    incumbent.f_x = unit.evaluate(incumbent.x);
  } catch (const std::exception& e) {
    record.f_best_final = std::numeric_limits<double>::quiet_NaN();
    detail::fail_run(record, e.what(), clock);
  }
  incumbent.x_best = incumbent.x;
  incumbent.f_best = incumbent.f_x;
  record.evaluations = 1;
  record.f_best_trajectory.push_back(incumbent.f_best);

  ScheduleState schedule = config.schedule;
  while (config.stopping.should_continue(record.iterations, schedule)) {
    BasStep step;
    try {
      step = bas_step(incumbent, schedule, unit, rng, config.sign_convention);
    } catch (const std::exception& e) {
      detail::finalize_record(record, incumbent, problem, clock);
      detail::fail_run(record, e.what(), clock);
    }
    incumbent = std::move(step.incumbent);
    schedule = step.schedule;
    ++record.iterations;
    ++record.schedule_updates;
    record.evaluations += step.info.evaluations;
    if (step.info.improved) ++record.improving_iterations;
    record.f_best_trajectory.push_back(incumbent.f_best);
    if (config.record_trace) record.trace.push_back(step.info);
  }

  detail::finalize_record(record, incumbent, problem, clock);
  return record;
}

}  // namespace beetle
