#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "beetle/problem.hpp"
#include "beetle/rng.hpp"
#include "beetle/run_record.hpp"

namespace beetle::detail {

/// Starting point in unit-box coordinates.
inline Vector initial_unit_position(const std::optional<Vector>& physical, const SearchProblem& problem,
                                    RngStream& rng) {
  const Eigen::Index n = problem.dimension();
  if (physical) {
    require_dimension(problem, physical->size(), "initial_position");
    return normalize_coords(*physical, problem).cwiseMax(0.0).cwiseMin(1.0);
  }
  Vector u(n);
  for (Eigen::Index i = 0; i < n; ++i) u[i] = rng.uniform();
  return u;
}

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Fills the final fields of `record` from the incumbent (unit-box coordinates).
inline void finalize_record(RunRecord& record, const BeetleIncumbent& incumbent, const SearchProblem& physical,
                            const Stopwatch& clock) {
  record.f_best_final = incumbent.f_best;
  record.x_best = denormalize_coords(incumbent.x_best, physical);
  record.wall_time_ms = clock.elapsed_ms();
}

[[noreturn]] inline void fail_run(RunRecord& record, const std::string& message, const Stopwatch& clock) {
  record.failure = message;
  record.wall_time_ms = clock.elapsed_ms();
  throw RunFailure(message, record);
}

}  // namespace beetle::detail
