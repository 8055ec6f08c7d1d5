#pragma once

#include "beetle/problem.hpp"

namespace beetle {

/// Goldstein-Price on R^2. Global minimum 3 at (0, -1).
double goldstein_price(const Vector& x);

/// Michalewicz: -sum_i sin(x_i) * sin(i * x_i^2 / pi)^(2m), i starting at 1.
/// Components must lie in [0, pi].
double michalewicz(const Vector& x, double m = 10.0);

double sphere(const Vector& x);

SearchProblem goldstein_price_problem();                                 // [-2,2]^2
SearchProblem michalewicz_problem(Eigen::Index dimension, double m = 10.0);  // [0,pi]^n
SearchProblem sphere_problem(Eigen::Index dimension, double lower = -1.0, double upper = 1.0);

}  // namespace beetle
