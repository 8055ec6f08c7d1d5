#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "beetle/rc_model.hpp"
#include "test_support.hpp"

using beetle::rc::ForcingSample;
using beetle::rc::RcParameters;
using beetle::rc::RcState;

namespace {

RcParameters simple_params() {
  RcParameters p;
  p.C1 = 4;
  p.C_in = 50;
  p.C_m = 10;
  p.R1 = 2;
  p.R2 = 1;
  p.R3 = 1;
  return p;
}

beetle::rc::RcForcing constant_forcing(std::size_t n, double h, ForcingSample u) {
  beetle::rc::RcForcing f;
  for (std::size_t j = 0; j < n; ++j) {
    f.timestamps.push_back(static_cast<double>(j) * h);
    f.T_out.push_back(u.T_out);
    f.Q_in.push_back(u.Q_in);
    f.Q_c.push_back(u.Q_c);
    f.Q_solar.push_back(u.Q_solar);
  }
  return f;
}

}  // namespace

TEST(RcDerivatives, EquilibriumIsStationary) {
  const RcState d = beetle::rc::rc_derivatives(RcState(20, 20, 20), simple_params(), {20, 0, 0, 0});
  EXPECT_TRUE(d.isZero(0));
}

TEST(RcDerivatives, Examples) {
  // (30 - 20) / (2 * 4) = 1.25
  const RcState a = beetle::rc::rc_derivatives(RcState(20, 20, 20), simple_params(), {30, 0, 0, 0});
  EXPECT_DOUBLE_EQ(a[0], 1.25);
  EXPECT_EQ(a[1], 0.0);
  // -100 W into C_in = 50 gives -2.
  const RcState b = beetle::rc::rc_derivatives(RcState(20, 20, 20), simple_params(), {20, 0, -100, 0});
  EXPECT_DOUBLE_EQ(b[1], -2.0);
  // Mass exchange: (T_in - T_m) / (R3 C_m)
  const RcState c = beetle::rc::rc_derivatives(RcState(20, 25, 20), simple_params(), {20, 0, 0, 0});
  EXPECT_DOUBLE_EQ(c[2], 0.5);
  EXPECT_DOUBLE_EQ(c[1], (-5.0 - 5.0) / 50);
}

TEST(RcDerivatives, RejectsNonPositiveParameters) {
  auto p = simple_params();
  p.R2 = 0;
  EXPECT_THROW(beetle::rc::rc_derivatives(RcState::Zero(), p, {}), std::invalid_argument);
  p = simple_params();
  p.C_m = -1;
  EXPECT_THROW(beetle::rc::rc_derivatives(RcState::Zero(), p, {}), std::invalid_argument);
}

TEST(RcDerivatives, AffineInStateAndForcing) {
  // f is affine: f(2s, 2u) - f(0,0) = 2 (f(s,u) - f(0,0)).
  const auto p = RcParameters{};
  const RcState s(27, 24.5, 25);
  const ForcingSample u{33, 800, -2000, 400};
  const ForcingSample u2{66, 1600, -4000, 800};
  const RcState f0 = beetle::rc::rc_derivatives(RcState::Zero(), p, {});
  const RcState f1 = beetle::rc::rc_derivatives(s, p, u);
  const RcState f2 = beetle::rc::rc_derivatives(2 * s, p, u2);
  EXPECT_LT((f2 - f0 - 2 * (f1 - f0)).norm(), 1e-15);
}

double rk4_exponential_error(double h) {
  // y' = -y, y(0) = 1 integrated to t = 1.
  Eigen::Matrix<double, 1, 1> y(1.0);
  const int steps = static_cast<int>(std::lround(1.0 / h));
  for (int i = 0; i < steps; ++i)
    y = beetle::rc::rk4_step(y, h, [](const Eigen::Matrix<double, 1, 1>& v) { return Eigen::Matrix<double, 1, 1>(-v); });
  return std::abs(y[0] - std::exp(-1.0));
}

TEST(Rk4, FourthOrderOnExponential) {
  double h = 0.1;
  for (int i = 0; i < 3; ++i, h /= 2) {
    const double ratio = rk4_exponential_error(h) / rk4_exponential_error(h / 2);
    EXPECT_GE(ratio, 12.0);
    EXPECT_LE(ratio, 20.0);
  }
}

TEST(Rk4Simulate, EquilibriumStaysConstant) {
  auto p = RcParameters{};
  p.T_e0 = p.T_in0 = p.T_m0 = 24;
  const auto y = beetle::rc::rk4_simulate(p, constant_forcing(500, 300, {24, 0, 0, 0}));
  for (double v : y) EXPECT_NEAR(v, 24.0, 1e-12);
}

TEST(Rk4Simulate, StepResponseApproachesOutdoorMonotonically) {
  auto p = RcParameters{};
  p.T_e0 = p.T_in0 = p.T_m0 = 20;
  const auto f = constant_forcing(2000, 300, {30, 0, 0, 0});
  const auto y = beetle::rc::rk4_simulate(p, f);
  for (std::size_t j = 1; j < y.size(); ++j) {
    EXPECT_GE(y[j], y[j - 1] - 1e-12);
    EXPECT_LE(y[j], 30.0 + 1e-12);
  }
  EXPECT_GT(y.back(), 29.0);

  // Compare with a run at one tenth the step; the fast indoor mode (~1000 s)
  // makes the 300 s step accurate to roughly 1e-5.
  const auto fine = beetle::rc::rk4_simulate(p, constant_forcing(19991, 30, {30, 0, 0, 0}));
  for (std::size_t j = 0; j < y.size(); ++j) EXPECT_NEAR(y[j], fine[10 * j], 5e-5);
}

TEST(Rk4Simulate, UnforcedDeviationEnergyNeverGrows) {
  // With T_out = 0 and no heat input, sum C_i T_i^2 is a Lyapunov function.
  const auto p = RcParameters{};
  auto q = p;
  q.T_e0 = 5;
  q.T_in0 = -3;
  q.T_m0 = 2;
  const auto states = beetle::rc::rk4_simulate_states(q, constant_forcing(1000, 300, {0, 0, 0, 0}));
  const Eigen::Vector3d c(p.C1, p.C_in, p.C_m);
  double prev = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < states.rows(); ++j) {
    const double e = (c.array() * states.row(j).transpose().array().square()).sum();
    EXPECT_LE(e, prev * (1 + 1e-12));
    prev = e;
  }
}

TEST(Mae, Examples) {
  EXPECT_DOUBLE_EQ(beetle::rc::mean_absolute_error({1, 2, 3}, {2, 2, 5}), 1.0);
  EXPECT_DOUBLE_EQ(beetle::rc::mean_absolute_error({1, 2, 3, 4}, {2, 3, 4, 5}), 1.0);
  EXPECT_THROW(beetle::rc::mean_absolute_error({1}, {1, 2}), std::invalid_argument);
}

TEST(MaeObjective, TruthScoresZeroOnNoiselessData) {
  const auto truth = RcParameters{};
  const auto d = beetle::rc::generate_synthetic_dataset(truth, {});
  EXPECT_LT(beetle::rc::mae_objective(truth.to_vector(), d), 1e-9);
  auto off = truth;
  off.R2 *= 1.2;
  EXPECT_GT(beetle::rc::mae_objective(off.to_vector(), d), 1e-3);
}

TEST(MaeObjective, InvalidParametersScorePenalty) {
  const auto d = beetle::rc::generate_synthetic_dataset(RcParameters{}, {});
  auto v = RcParameters{}.to_vector();
  v[5] = 0;
  EXPECT_EQ(beetle::rc::mae_objective(v, d), beetle::rc::kDefaultPenalty);
  v[5] = -3;
  EXPECT_EQ(beetle::rc::mae_objective(v, d, 42.0), 42.0);
}

TEST(Synthetic, SampleCountAndDeterminism) {
  beetle::rc::SyntheticSpec spec;
  spec.noise_std = 0.3;
  const auto a = beetle::rc::generate_synthetic_dataset(RcParameters{}, spec);
  const auto b = beetle::rc::generate_synthetic_dataset(RcParameters{}, spec);
  EXPECT_EQ(a.size(), 3u * 288 + 1);
  EXPECT_EQ(a.T_in_obs, b.T_in_obs);
  spec.seed = 2;
  EXPECT_NE(a.T_in_obs, beetle::rc::generate_synthetic_dataset(RcParameters{}, spec).T_in_obs);
}

TEST(Synthetic, NoiseMatchesGaussianMeanAbsoluteDeviation) {
  // E|N(0, s)| = s * sqrt(2/pi) ~= 0.0798 for s = 0.1.
  beetle::rc::SyntheticSpec spec;
  spec.duration_s = 7 * 86400;
  spec.noise_std = 0.1;
  const auto truth = RcParameters{};
  const auto d = beetle::rc::generate_synthetic_dataset(truth, spec);
  ASSERT_GE(d.size(), 2000u);
  EXPECT_NEAR(beetle::rc::mae_objective(truth.to_vector(), d), 0.1 * std::sqrt(2 / std::numbers::pi), 0.01);
}

TEST(Synthetic, ForcingProfile) {
  const auto f = beetle::rc::synthetic_forcing({});
  // 15:00 on day 0 is sample 180: outdoor peak, occupied, cooling on.
  EXPECT_DOUBLE_EQ(f.T_out[180], 35.0);
  EXPECT_EQ(f.Q_in[180], 1500.0);
  EXPECT_EQ(f.Q_c[180], -4000.0);
  // Midnight: unoccupied, dark.
  EXPECT_EQ(f.Q_in[0], 300.0);
  EXPECT_EQ(f.Q_c[0], 0.0);
  EXPECT_EQ(f.Q_solar[0], 0.0);
  // Noon: solar peak.
  EXPECT_NEAR(f.Q_solar[144], 2000.0, 1e-9);
}

TEST(SearchCoords, RoundTrip) {
  const RcParameters p{};
  const auto back = beetle::rc::from_search_coords(beetle::rc::to_search_coords(p));
  EXPECT_LT((back.to_vector() - p.to_vector()).cwiseQuotient(p.to_vector()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(IdentificationProblem, BoxAndObjective) {
  const auto d = beetle::rc::generate_synthetic_dataset(RcParameters{}, {});
  beetle::rc::SearchBounds bounds;
  bounds.center = RcParameters{};
  const auto prob = beetle::rc::identification_problem(d, bounds);
  EXPECT_EQ(prob.dimension(), 9);
  EXPECT_DOUBLE_EQ(prob.lower_bounds()[0], 23.0);
  EXPECT_DOUBLE_EQ(prob.upper_bounds()[1], 31.0);
  EXPECT_NEAR(std::exp(prob.lower_bounds()[3]), 1.5e6, 1e-3);
  EXPECT_NEAR(std::exp(prob.upper_bounds()[8]), 3e-3, 1e-15);
  EXPECT_LT(prob.evaluate(beetle::rc::to_search_coords(RcParameters{})), 1e-9);
}
