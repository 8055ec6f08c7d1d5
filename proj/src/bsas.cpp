#include "beetle/bsas.hpp"

#include <limits>

#include "run_support.hpp"

namespace beetle {

void BsasConfig::validate() const {
  if (k < 1) throw std::invalid_argument("bsas: k must be at least 1");
  if (!(p_delta >= 0 && p_delta <= 1)) throw std::invalid_argument("bsas: p_delta must lie in [0,1]");
  schedule.validate();
  stopping.validate();
  if (!(schedule.delta > stopping.delta_criterion))
    throw std::invalid_argument("bsas: initial delta must exceed delta_criterion");
}

namespace {

struct Candidate {
  Vector x;
  double f = 0;
  bool stationary = false;
  int evaluations = 0;
};

Candidate make_candidate(const BeetleIncumbent& incumbent, const ScheduleState& schedule, const BsasConfig& config,
                         const SearchProblem& problem, const Vector& b) {
  auto [x_r, x_l] = antenna_probes(incumbent.x, schedule.d, b);
  x_r = clamp_to_bounds(x_r, problem);
  x_l = clamp_to_bounds(x_l, problem);
  const double f_r = problem.evaluate(x_r);
  const double f_l = problem.evaluate(x_l);

  Candidate c;
  c.evaluations = 2;
  if (config.candidate_rule == CandidateRule::best_antenna) {
    if (f_r < f_l) {
      c.x = std::move(x_r);
      c.f = f_r;
    } else if (f_l < f_r) {
      c.x = std::move(x_l);
      c.f = f_l;
    } else {
      c.x = incumbent.x;
      c.f = incumbent.f_x;
    }
    c.stationary = c.x == incumbent.x;
    return c;
  }

  c.x = clamp_to_bounds(detect_step(incumbent.x, schedule.delta, b, f_r, f_l, config.sign_convention), problem);
  if (c.x == incumbent.x) {
    c.f = incumbent.f_x;
    c.stationary = true;
  } else {
    c.f = problem.evaluate(c.x);
    c.evaluations += 1;
  }
  return c;
}

}  // namespace

BsasStep bsas_iteration(const BeetleIncumbent& incumbent, const ScheduleState& schedule, const BsasConfig& config,
                        const SearchProblem& problem, const Eigen::MatrixXd& directions, RngStream& rng) {
  require_dimension(problem, incumbent.x.size(), "bsas_iteration");
  require_dimension(problem, directions.rows(), "bsas_iteration directions");
  if (directions.cols() < 1) throw std::invalid_argument("bsas_iteration: need at least one direction");

  BsasStep out{incumbent, schedule, false, {}};
  std::optional<Candidate> best;
  for (Eigen::Index i = 0; i < directions.cols(); ++i) {
    Candidate c = make_candidate(incumbent, schedule, config, problem, directions.col(i));
    out.info.evaluations += c.evaluations;
    if (c.stationary) ++out.info.stationary_candidates;
    // Strict comparison keeps the lowest index on ties.
    if (!best || c.f < best->f) best = std::move(c);
  }

  if (best->f < incumbent.f_best) {
    out.incumbent.f_best = best->f;
    out.incumbent.x_best = best->x;
    out.incumbent.x = best->x;
    out.incumbent.f_x = best->f;
    out.improved = true;
    out.info.improved = true;
    out.info.position_changed = true;
  } else {
    const double coin = rng.uniform();
    out.info.coin = coin;
    if (coin > config.p_delta) {
      out.schedule = update_schedule(schedule);
      out.info.schedule_updated = true;
    }
  }
  out.info.f_best = out.incumbent.f_best;
  out.info.d = out.schedule.d;
  out.info.delta = out.schedule.delta;
  return out;
}

BsasStep bsas_iteration(const BeetleIncumbent& incumbent, const ScheduleState& schedule, const BsasConfig& config,
                        const SearchProblem& problem, RngStream& rng) {
  const Eigen::MatrixXd directions = sample_unit_directions(rng, problem.dimension(), config.k);
  return bsas_iteration(incumbent, schedule, config, problem, directions, rng);
}

RunRecord run_bsas(const SearchProblem& problem, const BsasConfig& config, std::uint64_t seed) {
  config.validate();
  const detail::Stopwatch clock;
  RngStream rng(seed);
  const SearchProblem unit = unit_box_view(problem);

  RunRecord record;
  record.algorithm = Algorithm::bsas;
  record.k = config.k;
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
    BsasStep step;
    try {
      step = bsas_iteration(incumbent, schedule, config, unit, rng);
    } catch (const std::exception& e) {
      detail::finalize_record(record, incumbent, problem, clock);
      detail::fail_run(record, e.what(), clock);
    }
    incumbent = std::move(step.incumbent);
    schedule = step.schedule;
    ++record.iterations;
    record.evaluations += step.info.evaluations;
    if (step.improved) ++record.improving_iterations;
    if (step.info.schedule_updated) ++record.schedule_updates;
    record.f_best_trajectory.push_back(incumbent.f_best);
    if (config.record_trace) record.trace.push_back(step.info);
  }

  detail::finalize_record(record, incumbent, problem, clock);
  return record;
}

}  // namespace beetle
