#include "beetle/test_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beetle {

double goldstein_price(const Vector& x) {
  if (x.size() != 2) throw std::invalid_argument("goldstein_price: expects a 2-vector");
  const double a = x[0];
  const double b = x[1];
  const double s = a + b + 1;
  const double t = 2 * a - 3 * b;
  const double left = 1 + s * s * (19 - 14 * a + 3 * a * a - 14 * b + 6 * a * b + 3 * b * b);
  const double right = 30 + t * t * (18 - 32 * a + 12 * a * a + 48 * b - 36 * a * b + 27 * b * b);
  return left * right;
}

double michalewicz(const Vector& x, double m) {
  if (x.size() == 0) throw std::invalid_argument("michalewicz: empty vector");
  double sum = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    if (!(xi >= 0 && xi <= std::numbers::pi)) throw std::invalid_argument("michalewicz: component outside [0, pi]");
    const double inner = std::sin(static_cast<double>(i + 1) * xi * xi / std::numbers::pi);
    sum += std::sin(xi) * std::pow(inner, 2 * m);
  }
  return -sum;
}

double sphere(const Vector& x) { return x.squaredNorm(); }

SearchProblem goldstein_price_problem() {
  return SearchProblem(Vector::Constant(2, -2.0), Vector::Constant(2, 2.0),
                       [](const Vector& x) { return goldstein_price(x); });
}

SearchProblem michalewicz_problem(Eigen::Index dimension, double m) {
  return SearchProblem(Vector::Zero(dimension), Vector::Constant(dimension, std::numbers::pi),
                       [m](const Vector& x) { return michalewicz(x, m); });
}

SearchProblem sphere_problem(Eigen::Index dimension, double lower, double upper) {
  return SearchProblem(Vector::Constant(dimension, lower), Vector::Constant(dimension, upper),
                       [](const Vector& x) { return sphere(x); });
}

}  // namespace beetle
