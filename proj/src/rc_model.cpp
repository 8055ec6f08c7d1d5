#include "beetle/rc_model.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "beetle/rng.hpp"

namespace beetle::rc {

RcParameters::Vector9 RcParameters::to_vector() const {
  Vector9 v;
  v << T_e0, T_in0, T_m0, C1, C_in, C_m, R1, R2, R3;
  return v;
}

RcParameters RcParameters::from_vector(const Eigen::Ref<const Eigen::VectorXd>& v) {
  if (v.size() != 9) throw std::invalid_argument("RcParameters: expected 9 values");
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

bool RcParameters::is_valid() const {
  const auto v = to_vector();
  return v.allFinite() && (v.tail<6>().array() > 0).all();
}

void RcParameters::validate() const {
  if (!is_valid())
    throw std::invalid_argument("RcParameters: capacitances and resistances must be positive and finite");
}

double RcForcing::step() const {
  const std::size_t n = timestamps.size();
  if (T_out.size() != n || Q_in.size() != n || Q_c.size() != n || Q_solar.size() != n)
    throw std::invalid_argument("RcForcing: series lengths differ");
  if (n < 2) throw std::invalid_argument("RcForcing: need at least two samples");
  const double h = timestamps[1] - timestamps[0];
  if (!(h > 0)) throw std::invalid_argument("RcForcing: timestamps must be strictly increasing");
  for (std::size_t j = 1; j < n; ++j) {
    const double dt = timestamps[j] - timestamps[j - 1];
    if (std::abs(dt - h) > 1e-9 * std::max(1.0, h))
      throw std::invalid_argument("RcForcing: timestamps are not uniformly spaced");
  }
  return h;
}

void RcForcing::validate() const { (void)step(); }

void SyntheticSpec::validate() const {
  if (!(step_s > 0)) throw std::invalid_argument("synthetic: step_s must be positive");
  if (!(duration_s >= step_s)) throw std::invalid_argument("synthetic: duration_s must cover at least one step");
  if (!(noise_std >= 0)) throw std::invalid_argument("synthetic: noise_std must be nonnegative");
}

void RcDataset::validate() const {
  forcing.validate();
  if (T_in_obs.size() != forcing.size()) throw std::invalid_argument("RcDataset: observation length differs from forcing");
  if (truth) truth->validate();
}

namespace {

inline RcState derivatives_unchecked(const RcState& s, const RcParameters& p, const ForcingSample& u) {
  const double t_e = s[kEnvelope];
  const double t_in = s[kIndoor];
  const double t_m = s[kMass];
  const double to_mass = (t_in - t_m) / p.R3;
  return RcState((u.T_out - t_e) / (p.R1 * p.C1),
                 ((t_e - t_in) / p.R2 - to_mass + u.Q_in + u.Q_c + u.Q_solar) / p.C_in,
                 to_mass / p.C_m);
}

/// Rate coefficients of the network, precomputed once per parameter set.
struct Rates {
  double envelope;     // 1/(R1*C1)
  double indoor_env;   // 1/(R2*C_in)
  double indoor_mass;  // 1/(R3*C_in)
  double indoor_heat;  // 1/C_in
  double mass;         // 1/(R3*C_m)

  explicit Rates(const RcParameters& p)
      : envelope(1 / (p.R1 * p.C1)),
        indoor_env(1 / (p.R2 * p.C_in)),
        indoor_mass(1 / (p.R3 * p.C_in)),
        indoor_heat(1 / p.C_in),
        mass(1 / (p.R3 * p.C_m)) {}

  RcState operator()(const RcState& s, double t_out, double q_total) const {
    return RcState(envelope * (t_out - s[kEnvelope]),
                   indoor_env * (s[kEnvelope] - s[kIndoor]) - indoor_mass * (s[kIndoor] - s[kMass]) +
                       indoor_heat * q_total,
                   mass * (s[kIndoor] - s[kMass]));
  }
};

/// Integrates and hands each state (including the initial one) to `visit`.
/// Stops early when `visit` returns false.
template <typename Visit>
void integrate(const RcParameters& p, const RcForcing& forcing, double h, Visit&& visit) {
  const Rates rates(p);
  RcState y(p.T_e0, p.T_in0, p.T_m0);
  const std::size_t n = forcing.size();
  if (!visit(std::size_t{0}, y)) return;
  for (std::size_t j = 1; j < n; ++j) {
    const double t_out = forcing.T_out[j - 1];
    const double q_total = forcing.Q_in[j - 1] + forcing.Q_c[j - 1] + forcing.Q_solar[j - 1];
    y = rk4_step(y, h, [&](const RcState& s) { return rates(s, t_out, q_total); });
    if (!visit(j, y)) return;
  }
}

}  // namespace

RcState rc_derivatives(const RcState& state, const RcParameters& params, const ForcingSample& forcing) {
  params.validate();
  return derivatives_unchecked(state, params, forcing);
}

std::vector<double> rk4_simulate(const RcParameters& params, const RcForcing& forcing) {
  params.validate();
  const double h = forcing.step();
  std::vector<double> out(forcing.size());
  integrate(params, forcing, h, [&](std::size_t j, const RcState& y) {
    out[j] = y[kIndoor];
    return true;
  });
  return out;
}

Eigen::Matrix<double, Eigen::Dynamic, 3> rk4_simulate_states(const RcParameters& params, const RcForcing& forcing) {
  params.validate();
  const double h = forcing.step();
  Eigen::Matrix<double, Eigen::Dynamic, 3> out(static_cast<Eigen::Index>(forcing.size()), 3);
  integrate(params, forcing, h, [&](std::size_t j, const RcState& y) {
    out.row(static_cast<Eigen::Index>(j)) = y.transpose();
    return true;
  });
  return out;
}

double mean_absolute_error(const std::vector<double>& simulated, const std::vector<double>& observed) {
  if (simulated.size() != observed.size() || simulated.empty())
    throw std::invalid_argument("mean_absolute_error: series must be nonempty and of equal length");
  const Eigen::Map<const Eigen::ArrayXd> sim(simulated.data(), static_cast<Eigen::Index>(simulated.size()));
  const Eigen::Map<const Eigen::ArrayXd> obs(observed.data(), static_cast<Eigen::Index>(observed.size()));
  return (sim - obs).abs().mean();
}

double mae_objective(const Eigen::Ref<const Eigen::VectorXd>& x_pars, const RcDataset& dataset, double penalty) {
  if (x_pars.size() != 9) throw std::invalid_argument("mae_objective: expected 9 parameters");
  const RcParameters p = RcParameters::from_vector(x_pars);
  if (!p.is_valid()) return penalty;
  const double h = dataset.forcing.step();
  const std::size_t n = dataset.size();
  double sum = 0;
  bool finite = true;
  integrate(p, dataset.forcing, h, [&](std::size_t j, const RcState& y) {
    const double e = std::abs(y[kIndoor] - dataset.T_in_obs[j]);
    if (!std::isfinite(e)) {
      finite = false;
      return false;
    }
    sum += e;
    return true;
  });
  if (!finite) return penalty;
  const double mae = sum / static_cast<double>(n);
  return std::isfinite(mae) ? mae : penalty;
}

RcForcing synthetic_forcing(const SyntheticSpec& spec) {
  spec.validate();
  constexpr double kDay = 86400.0;
  const auto n = static_cast<std::size_t>(std::floor(spec.duration_s / spec.step_s + 1e-9)) + 1;
  RcForcing f;
  f.timestamps.resize(n);
  f.T_out.resize(n);
  f.Q_in.resize(n);
  f.Q_c.resize(n);
  f.Q_solar.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = static_cast<double>(j) * spec.step_s;
    const double hour = std::fmod(t, kDay) / 3600.0;
    const bool occupied = hour >= spec.occupied_start_hour && hour < spec.occupied_end_hour;
    f.timestamps[j] = t;
    // Diurnal cosine peaking at t_out_peak_hour.
    f.T_out[j] = spec.t_out_mean +
                 spec.t_out_amplitude * std::cos(2 * std::numbers::pi * (hour - spec.t_out_peak_hour) / 24.0);
    f.Q_in[j] = occupied ? spec.q_in_occupied : spec.q_in_unoccupied;
    f.Q_c[j] = occupied ? -spec.q_cooling : 0.0;
    const double daylight = spec.solar_end_hour - spec.solar_start_hour;
    const bool sunny = daylight > 0 && hour >= spec.solar_start_hour && hour < spec.solar_end_hour;
    f.Q_solar[j] = sunny ? spec.q_solar_peak * std::sin(std::numbers::pi * (hour - spec.solar_start_hour) / daylight)
                         : 0.0;
  }
  return f;
}

RcDataset generate_synthetic_dataset(const RcParameters& truth, const SyntheticSpec& spec) {
  truth.validate();
  RcDataset d;
  d.forcing = synthetic_forcing(spec);
  d.T_in_obs = rk4_simulate(truth, d.forcing);
  if (spec.noise_std > 0) {
    RngStream rng(spec.seed);
    for (double& v : d.T_in_obs) v += spec.noise_std * rng.normal();
  }
  d.truth = truth;
  d.generation = spec;
  return d;
}

void SearchBounds::validate() const {
  center.validate();
  if (!(temperature_band > 0)) throw std::invalid_argument("bounds: temperature_band must be positive");
  if (!(multiplicative_band > 0 && multiplicative_band < 1))
    throw std::invalid_argument("bounds: multiplicative_band must lie in (0,1)");
}

Eigen::VectorXd to_search_coords(const RcParameters& p) {
  Eigen::VectorXd x = p.to_vector();
  x.tail<6>() = x.tail<6>().array().log().matrix();
  return x;
}

RcParameters from_search_coords(const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != 9) throw std::invalid_argument("from_search_coords: expected 9 values");
  Eigen::VectorXd v = x;
  v.tail<6>() = v.tail<6>().array().exp().matrix();
  return RcParameters::from_vector(v);
}

SearchProblem identification_problem(RcDataset dataset, const SearchBounds& bounds, double penalty) {
  bounds.validate();
  dataset.validate();
  const auto c = bounds.center.to_vector();
  Eigen::VectorXd lower(9), upper(9);
  lower.head<3>() = c.head<3>().array() - bounds.temperature_band;
  upper.head<3>() = c.head<3>().array() + bounds.temperature_band;
  lower.tail<6>() = (c.tail<6>().array() * (1 - bounds.multiplicative_band)).log().matrix();
  upper.tail<6>() = (c.tail<6>().array() * (1 + bounds.multiplicative_band)).log().matrix();
  auto shared = std::make_shared<const RcDataset>(std::move(dataset));
  return SearchProblem(std::move(lower), std::move(upper), [shared, penalty](const Vector& x) {
    return mae_objective(from_search_coords(x).to_vector(), *shared, penalty);
  });
}

}  // namespace beetle::rc
