#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "beetle/problem.hpp"

namespace beetle {

/// Current position plus best-so-far. `f_x` caches the objective at `x` so a
/// stationary step needs no re-evaluation.
struct BeetleIncumbent {
  Vector x;
  double f_x = 0;
  Vector x_best;
  double f_best = 0;
};

enum class Algorithm { bas, bsas };

inline std::string_view to_string(Algorithm a) { return a == Algorithm::bas ? "bas" : "bsas"; }

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "bas") return Algorithm::bas;
  if (s == "bsas") return Algorithm::bsas;
  throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
}

/// One row of the optional per-iteration trace.
struct IterationTrace {
  double f_best = 0;
  double d = 0;  // schedule after the iteration
  double delta = 0;
  bool position_changed = false;
  bool improved = false;
  bool schedule_updated = false;
  std::optional<double> coin;  // BSAS retention draw, only on non-improving iterations
  int evaluations = 0;
  int stationary_candidates = 0;  // candidates equal to the current position (not evaluated)
};

struct RunRecord {
  Algorithm algorithm = Algorithm::bas;
  int k = 1;
  std::uint64_t seed = 0;
  double f_best_final = 0;
  Vector x_best;  // physical coordinates
  /// Entry 0 is f(x0); entry t is f_best after iteration t.
  std::vector<double> f_best_trajectory;
  std::int64_t iterations = 0;
  std::int64_t evaluations = 0;
  std::int64_t improving_iterations = 0;
  std::int64_t schedule_updates = 0;
  std::int64_t wall_time_ms = 0;
  std::optional<std::string> failure;
  std::vector<IterationTrace> trace;  // filled only when requested
};

/// Thrown when the objective fails mid-run; carries the partial record.
class RunFailure : public std::runtime_error {
 public:
  RunFailure(const std::string& what, RunRecord partial) : std::runtime_error(what), partial_(std::move(partial)) {}
  const RunRecord& partial() const { return partial_; }

 private:
  RunRecord partial_;
};

}  // namespace beetle
