#include <gtest/gtest.h>

#include "beetle/config.hpp"

using nlohmann::json;

TEST(Config, EmptyDocumentUsesDefaults) {
  const auto c = beetle::parse_config(json::object());
  EXPECT_EQ(c.problem.kind, beetle::ProblemKind::goldstein_price);
  EXPECT_EQ(c.algorithm.variants.size(), 6u);
  EXPECT_EQ(c.algorithm.p_delta, 0.2);
  EXPECT_EQ(c.schedule, beetle::ScheduleState{});
  EXPECT_EQ(c.stopping.max_iterations, 2000);
  EXPECT_EQ(c.experiment.trials, 50);
  EXPECT_EQ(c.experiment.bin_count, 15);
  EXPECT_FALSE(c.experiment.initial_position.has_value());
}

TEST(Config, UnknownKeysAreErrors) {
  EXPECT_THROW(beetle::parse_config(json{{"problme", json::object()}}), beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json{{"schedule", {{"eta", 0.9}}}}), beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json{{"algorithm", {{"variants", {{{"algorithm", "bsas"}, {"kk", 2}}}}}}}),
               beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json{{"problem", {{"type", "rc"}, {"truth", {{"R4", 1}}}}}}),
               beetle::ConfigError);
}

TEST(Config, WrongTypesAndValuesAreErrors) {
  EXPECT_THROW(beetle::parse_config(json{{"experiment", {{"trials", "ten"}}}}), beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json{{"experiment", {{"trials", 0}}}}), beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json{{"algorithm", {{"p_delta", 1.5}}}}), beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json{{"schedule", {{"eta_d", 1.0}}}}), beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json{{"problem", {{"type", "rosenbrock"}}}}), beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json{{"algorithm", {{"variants", {{{"algorithm", "bas"}, {"k", 3}}}}}}}),
               beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json{{"experiment", {{"initial_position", {1, 2, 3}}}}}), beetle::ConfigError);
  EXPECT_THROW(beetle::parse_config(json::array()), beetle::ConfigError);
}

TEST(Config, AntennaLengthDefaultsToStepSize) {
  const auto c = beetle::parse_config(json{{"schedule", {{"delta", 0.4}}}});
  EXPECT_EQ(c.schedule.d, 0.4);
  const auto e = beetle::parse_config(json{{"schedule", {{"delta", 0.4}, {"d", 0.1}}}});
  EXPECT_EQ(e.schedule.d, 0.1);
}

TEST(Config, ResolvedJsonRoundTrips) {
  const json doc = {
      {"problem", {{"type", "rc"}, {"truth", {{"R1", 4e-3}}}, {"synthetic", {{"noise_std", 0.1}, {"seed", 9}}}}},
      {"algorithm",
       {{"variants", {{{"algorithm", "bsas"}, {"k", 3}}}}, {"p_delta", 0.5}, {"candidate_rule", "best_antenna"}}},
      {"schedule", {{"delta", 0.3}, {"d", 0.6}}},
      {"stopping", {{"max_iterations", 100}}},
      {"experiment", {{"trials", 7}, {"base_seed", 11}, {"initial_position", {28, 26, 26, 1, 2, 3, 4, 5, 6}}}}};
  const auto c = beetle::parse_config(doc);
  const json resolved = beetle::to_json(c);
  const auto again = beetle::parse_config(resolved);
  EXPECT_EQ(beetle::to_json(again), resolved);
  EXPECT_EQ(again.problem.truth.R1, 4e-3);
  EXPECT_EQ(again.problem.synthetic.seed, 9u);
  EXPECT_EQ(again.algorithm.candidate_rule, beetle::CandidateRule::best_antenna);
  EXPECT_EQ(again.experiment.initial_position->size(), 9);
}

TEST(Config, ShippedConfigsLoad) {
  for (const char* name : {"rc_experiment.json", "rc_dataset.json", "goldstein_price.json", "michalewicz.json"})
    EXPECT_NO_THROW(beetle::load_config(std::filesystem::path(BEETLE_SOURCE_DIR) / "configs" / name)) << name;
}

TEST(Config, MissingOrMalformedFileIsConfigError) {
  EXPECT_THROW(beetle::load_config("/nonexistent/config.json"), beetle::ConfigError);
}
