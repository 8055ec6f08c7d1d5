#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

namespace beetle {

using Vector = Eigen::VectorXd;
using Objective = std::function<double(const Vector&)>;

/// Box-bounded minimization target. The objective must be deterministic.
class SearchProblem {
 public:
  SearchProblem(Vector lower, Vector upper, Objective objective)
      : lower_(std::move(lower)), upper_(std::move(upper)), objective_(std::move(objective)) {
    if (lower_.size() == 0) throw std::invalid_argument("SearchProblem: dimension must be positive");
    if (lower_.size() != upper_.size())
      throw std::invalid_argument("SearchProblem: bound vectors differ in length");
    if (!(lower_.array() < upper_.array()).all())
      throw std::invalid_argument("SearchProblem: every lower bound must be below its upper bound");
    if (!objective_) throw std::invalid_argument("SearchProblem: empty objective");
  }

  Eigen::Index dimension() const { return lower_.size(); }
  const Vector& lower_bounds() const { return lower_; }
  const Vector& upper_bounds() const { return upper_; }

  double evaluate(const Vector& x) const { return objective_(x); }
  const Objective& objective() const { return objective_; }

 private:
  Vector lower_;
  Vector upper_;
  Objective objective_;
};

inline void require_dimension(const SearchProblem& problem, Eigen::Index n, const char* what) {
  if (n != problem.dimension())
    throw std::invalid_argument(std::string(what) + ": vector length does not match problem dimension");
}

inline Vector clamp_to_bounds(const Vector& x, const SearchProblem& problem) {
  require_dimension(problem, x.size(), "clamp_to_bounds");
  return x.cwiseMax(problem.lower_bounds()).cwiseMin(problem.upper_bounds());
}

/// Affine map of the bounds box onto [0,1]^n.
inline Vector normalize_coords(const Vector& x, const SearchProblem& problem) {
  require_dimension(problem, x.size(), "normalize_coords");
  const auto& lo = problem.lower_bounds();
  const auto& hi = problem.upper_bounds();
  return ((x - lo).array() / (hi - lo).array()).matrix();
}

inline Vector denormalize_coords(const Vector& u, const SearchProblem& problem) {
  require_dimension(problem, u.size(), "denormalize_coords");
  const auto& lo = problem.lower_bounds();
  const auto& hi = problem.upper_bounds();
  return (lo.array() + u.array() * (hi - lo).array()).matrix();
}

/// The same problem viewed through [0,1]^n coordinates: the returned problem's
/// objective denormalizes before calling the physical objective.
inline SearchProblem unit_box_view(const SearchProblem& problem) {
  const Eigen::Index n = problem.dimension();
  return SearchProblem(Vector::Zero(n), Vector::Ones(n),
                       [problem](const Vector& u) { return problem.evaluate(denormalize_coords(u, problem)); });
}

}  // namespace beetle
