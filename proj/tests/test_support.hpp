#pragma once

#include <initializer_list>

#include "beetle/problem.hpp"

namespace beetle::testing {

inline Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

inline SearchProblem sphere_box(Eigen::Index n, double lo, double hi) {
  return SearchProblem(Vector::Constant(n, lo), Vector::Constant(n, hi), [](const Vector& x) { return x.squaredNorm(); });
}

}  // namespace beetle::testing
