#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

#include "beetle/rng.hpp"

namespace beetle {

/// Which way the detection step moves relative to the antenna comparison.
/// `toward_better` steps toward the antenna with the lower objective value;
/// `as_printed` uses x + delta*b*sign(f_r - f_l), which moves away from it
/// when minimizing.
enum class SignConvention { toward_better, as_printed };

template <typename Scalar>
constexpr Scalar sign(Scalar v) {
  return static_cast<Scalar>((Scalar(0) < v) - (v < Scalar(0)));
}

/// Isotropic unit vector: independent standard normals, normalized.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> sample_unit_direction(RngStream& rng, Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("sample_unit_direction: dimension must be at least 1");
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(n);
  Scalar norm = 0;
  // A zero-norm draw has probability zero but would divide by zero.
  do {
    for (Eigen::Index i = 0; i < n; ++i) v[i] = static_cast<Scalar>(rng.normal());
    norm = v.norm();
  } while (!(norm > Scalar(0)));
  return v / norm;
}

/// k unit directions drawn in order, one per column.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sample_unit_directions(RngStream& rng, Eigen::Index n,
                                                                            Eigen::Index k) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dirs(n, k);
  for (Eigen::Index i = 0; i < k; ++i) dirs.col(i) = sample_unit_direction<Scalar>(rng, n);
  return dirs;
}

/// Right and left antenna tips: x + d*b and x - d*b.
template <typename DerivedX, typename DerivedB>
auto antenna_probes(const Eigen::MatrixBase<DerivedX>& x, typename DerivedX::Scalar d,
                    const Eigen::MatrixBase<DerivedB>& b) {
  using Plain = typename DerivedX::PlainObject;
  if (x.size() != b.size()) throw std::invalid_argument("antenna_probes: x and b differ in length");
  return std::pair<Plain, Plain>{x + d * b, x - d * b};
}

/// Detection step: x - delta*b*sign(f_r - f_l) under `toward_better`.
template <typename DerivedX, typename DerivedB>
typename DerivedX::PlainObject detect_step(const Eigen::MatrixBase<DerivedX>& x, typename DerivedX::Scalar delta,
                                           const Eigen::MatrixBase<DerivedB>& b, typename DerivedX::Scalar f_r,
                                           typename DerivedX::Scalar f_l,
                                           SignConvention convention = SignConvention::toward_better) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != b.size()) throw std::invalid_argument("detect_step: x and b differ in length");
  const Scalar s = sign(f_r - f_l);
  if (s == Scalar(0)) return x;
  const Scalar direction = convention == SignConvention::toward_better ? -s : s;
  return x + (direction * delta) * b;
}

/// Antenna length and step size with their geometric attenuation and additive floors.
struct ScheduleState {
  double d = 0.7;
  double delta = 0.7;
  double eta_d = 0.95;
  double eta_delta = 0.95;
  double d_floor = 1e-6;
  double delta_floor = 1e-6;

  void validate() const {
    if (!(d >= 0) || !(delta >= 0)) throw std::invalid_argument("schedule: d and delta must be nonnegative");
    if (!(eta_d > 0 && eta_d < 1) || !(eta_delta > 0 && eta_delta < 1))
      throw std::invalid_argument("schedule: attenuation coefficients must lie in (0,1)");
    if (!(d_floor >= 0) || !(delta_floor >= 0))
      throw std::invalid_argument("schedule: floors must be nonnegative");
  }

  double d_fixed_point() const { return d_floor / (1 - eta_d); }
  double delta_fixed_point() const { return delta_floor / (1 - eta_delta); }

  friend bool operator==(const ScheduleState&, const ScheduleState&) = default;
};

inline ScheduleState update_schedule(ScheduleState s) {
  s.d = s.eta_d * s.d + s.d_floor;
  s.delta = s.eta_delta * s.delta + s.delta_floor;
  return s;
}

/// Iteration continues while t < max_iterations and delta > delta_criterion.
struct StoppingRule {
  std::int64_t max_iterations = 2000;
  double delta_criterion = 1e-8;

  void validate() const {
    if (max_iterations < 1) throw std::invalid_argument("stopping: max_iterations must be positive");
    if (!(delta_criterion >= 0)) throw std::invalid_argument("stopping: delta_criterion must be nonnegative");
  }

  bool should_continue(std::int64_t iteration, const ScheduleState& s) const {
    return iteration < max_iterations && s.delta > delta_criterion;
  }
};

}  // namespace beetle
