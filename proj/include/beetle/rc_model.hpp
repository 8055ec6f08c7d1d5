#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "beetle/problem.hpp"

namespace beetle::rc {

/// Lumped one-zone building: envelope (T_e), indoor air (T_in), internal mass (T_m).
struct RcParameters {
  double T_e0 = 28;
  double T_in0 = 26;
  double T_m0 = 26;
  double C1 = 3e6;  // J/K
  double C_in = 5e5;
  double C_m = 8e6;
  double R1 = 5e-3;  // K/W
  double R2 = 5e-3;
  double R3 = 2e-3;

  using Vector9 = Eigen::Matrix<double, 9, 1>;

  /// Order [T_e0, T_in0, T_m0, C1, C_in, C_m, R1, R2, R3].
  Vector9 to_vector() const;
  static RcParameters from_vector(const Eigen::Ref<const Eigen::VectorXd>& v);

  bool is_valid() const;
  void validate() const;

  friend bool operator==(const RcParameters&, const RcParameters&) = default;
};

/// State vector ordered [T_e, T_in, T_m].
using RcState = Eigen::Vector3d;
enum RcStateIndex : Eigen::Index { kEnvelope = 0, kIndoor = 1, kMass = 2 };

struct ForcingSample {
  double T_out = 0;
  double Q_in = 0;
  double Q_c = 0;
  double Q_solar = 0;
};

/// Exogenous drivers sampled on a uniform time grid.
struct RcForcing {
  std::vector<double> timestamps;  // seconds
  std::vector<double> T_out;
  std::vector<double> Q_in;
  std::vector<double> Q_c;
  std::vector<double> Q_solar;

  std::size_t size() const { return timestamps.size(); }
  ForcingSample at(std::size_t j) const { return {T_out[j], Q_in[j], Q_c[j], Q_solar[j]}; }
  /// Constant spacing; throws unless lengths agree and the grid is uniform and increasing.
  double step() const;
  void validate() const;
};

/// Shapes of the synthetic drivers, all in SI units and hours-of-day.
struct SyntheticSpec {
  double duration_s = 3 * 86400.0;
  double step_s = 300;
  double t_out_mean = 30;
  double t_out_amplitude = 5;
  double t_out_peak_hour = 15;
  double q_in_occupied = 1500;
  double q_in_unoccupied = 300;
  double occupied_start_hour = 8;
  double occupied_end_hour = 18;
  double q_cooling = 4000;  // magnitude; applied as -q_cooling while occupied
  double q_solar_peak = 2000;
  double solar_start_hour = 6;
  double solar_end_hour = 18;
  double noise_std = 0;
  std::uint64_t seed = 1;

  void validate() const;
  friend bool operator==(const SyntheticSpec&, const SyntheticSpec&) = default;
};

struct RcDataset {
  RcForcing forcing;
  std::vector<double> T_in_obs;
  std::optional<RcParameters> truth;
  std::optional<SyntheticSpec> generation;

  std::size_t size() const { return T_in_obs.size(); }
  void validate() const;
};

/// Right-hand side of the three-node RC network (degC/s).
RcState rc_derivatives(const RcState& state, const RcParameters& params, const ForcingSample& forcing);

/// Classical fourth-order Runge-Kutta step for an autonomous-in-stage system
/// y' = f(y). Works for any Eigen vector type.
template <typename State, typename Rhs>
State rk4_step(const State& y, double h, Rhs&& f) {
  const State k1 = f(y);
  const State k2 = f(State(y + (0.5 * h) * k1));
  const State k3 = f(State(y + (0.5 * h) * k2));
  const State k4 = f(State(y + h * k3));
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Indoor temperature at every forcing timestamp (first entry T_in0). Forcing
/// is held at the left sample throughout each step.
std::vector<double> rk4_simulate(const RcParameters& params, const RcForcing& forcing);

/// Full state trajectory, one row per timestamp.
Eigen::Matrix<double, Eigen::Dynamic, 3> rk4_simulate_states(const RcParameters& params, const RcForcing& forcing);

double mean_absolute_error(const std::vector<double>& simulated, const std::vector<double>& observed);

inline constexpr double kDefaultPenalty = 1e6;

/// Mean absolute error between simulated and observed T_in for physical
/// parameters `x_pars`. Invalid or diverging parameters score `penalty`.
double mae_objective(const Eigen::Ref<const Eigen::VectorXd>& x_pars, const RcDataset& dataset,
                     double penalty = kDefaultPenalty);

RcForcing synthetic_forcing(const SyntheticSpec& spec);
RcDataset generate_synthetic_dataset(const RcParameters& truth, const SyntheticSpec& spec);

/// Identification box: temperatures within +-temperature_band of the center,
/// capacitances and resistances within [center*(1-band), center*(1+band)].
struct SearchBounds {
  RcParameters center;
  double temperature_band = 5.0;
  double multiplicative_band = 0.5;

  void validate() const;
};

/// Search coordinates are [T_e0, T_in0, T_m0, ln C1, ln C_in, ln C_m, ln R1, ln R2, ln R3].
Eigen::VectorXd to_search_coords(const RcParameters& p);
RcParameters from_search_coords(const Eigen::Ref<const Eigen::VectorXd>& x);

/// SearchProblem over log-scaled parameters; the objective is mae_objective.
SearchProblem identification_problem(RcDataset dataset, const SearchBounds& bounds,
                                     double penalty = kDefaultPenalty);

}  // namespace beetle::rc
