#include "beetle/config.hpp"

#include <set>

#include "beetle/text_io.hpp"

namespace beetle {

using nlohmann::json;

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::goldstein_price: return "goldstein_price";
    case ProblemKind::michalewicz: return "michalewicz";
    case ProblemKind::sphere: return "sphere";
    case ProblemKind::rc: return "rc";
  }
  return "?";
}

std::string_view to_string(SignConvention c) {
  return c == SignConvention::toward_better ? "toward_better" : "as_printed";
}

std::string_view to_string(CandidateRule r) {
  return r == CandidateRule::detect_step ? "detect_step" : "best_antenna";
}

namespace {

/// Reads keys from one JSON object and rejects any it did not consume.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError("'" + path_ + "' must be an object");
  }

  const json* find(const std::string& key) {
    const auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    seen_.insert(key);
    return &*it;
  }

  void number(const std::string& key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) throw ConfigError(where(key) + " must be a number");
      out = v->get<double>();
    }
  }

  template <typename Int>
  void integer(const std::string& key, Int& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer()) throw ConfigError(where(key) + " must be an integer");
      if constexpr (std::is_unsigned_v<Int>) {
        if (v->is_number_unsigned() || v->get<long long>() >= 0) {
          out = v->get<Int>();
        } else {
          throw ConfigError(where(key) + " must be nonnegative");
        }
      } else {
        out = v->get<Int>();
      }
    }
  }

  void string(const std::string& key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) throw ConfigError(where(key) + " must be a string");
      out = v->get<std::string>();
    }
  }

  std::string where(const std::string& key) const { return "'" + path_ + "." + key + "'"; }

  void finish() const {
    for (const auto& [key, _] : j_.items())
      if (!seen_.count(key)) throw ConfigError("unknown key '" + path_ + "." + key + "'");
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

rc::RcParameters parse_rc_parameters(const json& j, const std::string& path, rc::RcParameters p = {}) {
  Section s(j, path);
  s.number("T_e0", p.T_e0);
  s.number("T_in0", p.T_in0);
  s.number("T_m0", p.T_m0);
  s.number("C1", p.C1);
  s.number("C_in", p.C_in);
  s.number("C_m", p.C_m);
  s.number("R1", p.R1);
  s.number("R2", p.R2);
  s.number("R3", p.R3);
  s.finish();
  return p;
}

rc::SyntheticSpec parse_synthetic(const json& j, const std::string& path) {
  rc::SyntheticSpec spec;
  Section s(j, path);
  s.number("duration_s", spec.duration_s);
  s.number("step_s", spec.step_s);
  s.number("t_out_mean", spec.t_out_mean);
  s.number("t_out_amplitude", spec.t_out_amplitude);
  s.number("t_out_peak_hour", spec.t_out_peak_hour);
  s.number("q_in_occupied", spec.q_in_occupied);
  s.number("q_in_unoccupied", spec.q_in_unoccupied);
  s.number("occupied_start_hour", spec.occupied_start_hour);
  s.number("occupied_end_hour", spec.occupied_end_hour);
  s.number("q_cooling", spec.q_cooling);
  s.number("q_solar_peak", spec.q_solar_peak);
  s.number("solar_start_hour", spec.solar_start_hour);
  s.number("solar_end_hour", spec.solar_end_hour);
  s.number("noise_std", spec.noise_std);
  s.integer("seed", spec.seed);
  s.finish();
  return spec;
}

ProblemKind parse_problem_kind(const std::string& s) {
  for (auto k : {ProblemKind::goldstein_price, ProblemKind::michalewicz, ProblemKind::sphere, ProblemKind::rc})
    if (s == to_string(k)) return k;
  throw ConfigError("unknown problem type '" + s + "'");
}

void parse_problem(const json& j, ProblemConfig& p) {
  Section s(j, "problem");
  std::string type(to_string(p.kind));
  s.string("type", type);
  p.kind = parse_problem_kind(type);
  s.integer("dimension", p.dimension);
  s.number("michalewicz_m", p.michalewicz_m);
  s.number("sphere_lower", p.sphere_lower);
  s.number("sphere_upper", p.sphere_upper);
  if (const json* v = s.find("dataset")) {
    if (v->is_null()) {
      p.dataset.reset();
    } else {
      if (!v->is_string()) throw ConfigError("'problem.dataset' must be a string path");
      p.dataset = v->get<std::string>();
    }
  }
  if (const json* v = s.find("truth")) p.truth = parse_rc_parameters(*v, "problem.truth");
  if (const json* v = s.find("synthetic")) p.synthetic = parse_synthetic(*v, "problem.synthetic");
  if (const json* v = s.find("center")) {
    if (v->is_null())
      p.center.reset();
    else
      p.center = parse_rc_parameters(*v, "problem.center");
  }
  s.number("temperature_band", p.temperature_band);
  s.number("multiplicative_band", p.multiplicative_band);
  s.number("penalty", p.penalty);
  s.finish();
}

void parse_algorithm_section(const json& j, AlgorithmConfig& a) {
  Section s(j, "algorithm");
  if (const json* v = s.find("variants")) {
    if (!v->is_array()) throw ConfigError("'algorithm.variants' must be an array");
    a.variants.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      Section vs((*v)[i], "algorithm.variants[" + std::to_string(i) + "]");
      std::string name = "bsas";
      vs.string("algorithm", name);
      Variant variant;
      try {
        variant.algorithm = beetle::parse_algorithm(name);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      vs.integer("k", variant.k);
      vs.finish();
      a.variants.push_back(variant);
    }
  }
  s.number("p_delta", a.p_delta);
  std::string sign(to_string(a.sign_convention));
  s.string("sign_convention", sign);
  if (sign == "toward_better")
    a.sign_convention = SignConvention::toward_better;
  else if (sign == "as_printed")
    a.sign_convention = SignConvention::as_printed;
  else
    throw ConfigError("unknown sign_convention '" + sign + "'");
  std::string rule(to_string(a.candidate_rule));
  s.string("candidate_rule", rule);
  if (rule == "detect_step")
    a.candidate_rule = CandidateRule::detect_step;
  else if (rule == "best_antenna")
    a.candidate_rule = CandidateRule::best_antenna;
  else
    throw ConfigError("unknown candidate_rule '" + rule + "'");
  s.finish();
}

void parse_schedule(const json& j, ScheduleState& sch) {
  Section s(j, "schedule");
  s.number("delta", sch.delta);
  sch.d = sch.delta;
  s.number("d", sch.d);
  s.number("eta_d", sch.eta_d);
  s.number("eta_delta", sch.eta_delta);
  s.number("d_floor", sch.d_floor);
  s.number("delta_floor", sch.delta_floor);
  s.finish();
}

void parse_stopping(const json& j, StoppingRule& st) {
  Section s(j, "stopping");
  s.integer("max_iterations", st.max_iterations);
  s.number("delta_criterion", st.delta_criterion);
  s.finish();
}

void parse_experiment(const json& j, ExperimentSettings& e) {
  Section s(j, "experiment");
  s.integer("trials", e.trials);
  s.integer("base_seed", e.base_seed);
  s.integer("workers", e.workers);
  s.integer("bin_count", e.bin_count);
  if (const json* v = s.find("initial_position")) {
    if (v->is_null() || (v->is_string() && v->get<std::string>() == "random")) {
      e.initial_position.reset();
    } else if (v->is_array()) {
      Vector x(static_cast<Eigen::Index>(v->size()));
      for (std::size_t i = 0; i < v->size(); ++i) {
        if (!(*v)[i].is_number()) throw ConfigError("'experiment.initial_position' entries must be numbers");
        x[static_cast<Eigen::Index>(i)] = (*v)[i].get<double>();
      }
      e.initial_position = std::move(x);
    } else {
      throw ConfigError("'experiment.initial_position' must be \"random\" or an array of numbers");
    }
  }
  s.finish();
}

}  // namespace

void ExperimentConfig::validate() const {
  try {
    schedule.validate();
    stopping.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!(schedule.delta > stopping.delta_criterion))
    throw ConfigError("schedule.delta must exceed stopping.delta_criterion");
  if (!(algorithm.p_delta >= 0 && algorithm.p_delta <= 1)) throw ConfigError("algorithm.p_delta must lie in [0,1]");
  if (algorithm.variants.empty()) throw ConfigError("algorithm.variants must not be empty");
  for (const auto& v : algorithm.variants) {
    if (v.k < 1) throw ConfigError("variant k must be at least 1");
    if (v.algorithm == Algorithm::bas && v.k != 1) throw ConfigError("bas variants use k = 1");
  }
  if (experiment.trials < 1) throw ConfigError("experiment.trials must be positive");
  if (experiment.workers < 1) throw ConfigError("experiment.workers must be positive");
  if (experiment.bin_count < 1) throw ConfigError("experiment.bin_count must be positive");

  Eigen::Index dim = 0;
  switch (problem.kind) {
    case ProblemKind::goldstein_price:
      if (problem.dimension != 2) throw ConfigError("goldstein_price is two-dimensional");
      dim = 2;
      break;
    case ProblemKind::michalewicz:
    case ProblemKind::sphere:
      if (problem.dimension < 1) throw ConfigError("problem.dimension must be positive");
      if (problem.kind == ProblemKind::sphere && !(problem.sphere_lower < problem.sphere_upper))
        throw ConfigError("sphere bounds must satisfy lower < upper");
      dim = problem.dimension;
      break;
    case ProblemKind::rc:
      dim = 9;
      if (!problem.dataset) {
        if (!problem.truth.is_valid()) throw ConfigError("problem.truth must have positive C and R values");
        try {
          problem.synthetic.validate();
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      }
      if (problem.center && !problem.center->is_valid())
        throw ConfigError("problem.center must have positive C and R values");
      if (!(problem.temperature_band > 0)) throw ConfigError("problem.temperature_band must be positive");
      if (!(problem.multiplicative_band > 0 && problem.multiplicative_band < 1))
        throw ConfigError("problem.multiplicative_band must lie in (0,1)");
      break;
  }
  if (experiment.initial_position && experiment.initial_position->size() != dim)
    throw ConfigError("experiment.initial_position has the wrong length for this problem");
}

ExperimentConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
  ExperimentConfig c;
  c.base_dir = base_dir;
  Section root(doc, "config");
  if (const json* v = root.find("problem")) parse_problem(*v, c.problem);
  if (const json* v = root.find("algorithm")) parse_algorithm_section(*v, c.algorithm);
  if (const json* v = root.find("schedule"))
    parse_schedule(*v, c.schedule);
  else
    c.schedule.d = c.schedule.delta;
  if (const json* v = root.find("stopping")) parse_stopping(*v, c.stopping);
  if (const json* v = root.find("experiment")) parse_experiment(*v, c.experiment);
  root.finish();
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path.string() + "': " + e.what());
  }
  return parse_config(doc, path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

json to_json(const rc::RcParameters& p) {
  return json{{"T_e0", p.T_e0}, {"T_in0", p.T_in0}, {"T_m0", p.T_m0}, {"C1", p.C1}, {"C_in", p.C_in},
              {"C_m", p.C_m},   {"R1", p.R1},       {"R2", p.R2},     {"R3", p.R3}};
}

rc::RcParameters rc_parameters_from_json(const json& j) {
  rc::RcParameters p = parse_rc_parameters(j, "parameters");
  return p;
}

json to_json(const rc::SyntheticSpec& s) {
  return json{{"duration_s", s.duration_s},
              {"step_s", s.step_s},
              {"t_out_mean", s.t_out_mean},
              {"t_out_amplitude", s.t_out_amplitude},
              {"t_out_peak_hour", s.t_out_peak_hour},
              {"q_in_occupied", s.q_in_occupied},
              {"q_in_unoccupied", s.q_in_unoccupied},
              {"occupied_start_hour", s.occupied_start_hour},
              {"occupied_end_hour", s.occupied_end_hour},
              {"q_cooling", s.q_cooling},
              {"q_solar_peak", s.q_solar_peak},
              {"solar_start_hour", s.solar_start_hour},
              {"solar_end_hour", s.solar_end_hour},
              {"noise_std", s.noise_std},
              {"seed", s.seed}};
}

rc::SyntheticSpec synthetic_spec_from_json(const json& j) { return parse_synthetic(j, "synthetic"); }

json to_json(const ExperimentConfig& c) {
  json problem{{"type", to_string(c.problem.kind)}};
  switch (c.problem.kind) {
    case ProblemKind::goldstein_price: break;
    case ProblemKind::michalewicz:
      problem["dimension"] = c.problem.dimension;
      problem["michalewicz_m"] = c.problem.michalewicz_m;
      break;
    case ProblemKind::sphere:
      problem["dimension"] = c.problem.dimension;
      problem["sphere_lower"] = c.problem.sphere_lower;
      problem["sphere_upper"] = c.problem.sphere_upper;
      break;
    case ProblemKind::rc:
      if (c.problem.dataset) {
        problem["dataset"] = *c.problem.dataset;
      } else {
        problem["truth"] = to_json(c.problem.truth);
        problem["synthetic"] = to_json(c.problem.synthetic);
      }
      problem["center"] = c.problem.center ? to_json(*c.problem.center) : json(nullptr);
      problem["temperature_band"] = c.problem.temperature_band;
      problem["multiplicative_band"] = c.problem.multiplicative_band;
      problem["penalty"] = c.problem.penalty;
      break;
  }

  json variants = json::array();
  for (const auto& v : c.algorithm.variants) variants.push_back({{"algorithm", to_string(v.algorithm)}, {"k", v.k}});

  json initial = "random";
  if (c.experiment.initial_position) {
    initial = json::array();
    for (double x : *c.experiment.initial_position) initial.push_back(x);
  }

  return json{{"problem", problem},
              {"algorithm",
               {{"variants", variants},
                {"p_delta", c.algorithm.p_delta},
                {"sign_convention", to_string(c.algorithm.sign_convention)},
                {"candidate_rule", to_string(c.algorithm.candidate_rule)}}},
              {"schedule",
               {{"d", c.schedule.d},
                {"delta", c.schedule.delta},
                {"eta_d", c.schedule.eta_d},
                {"eta_delta", c.schedule.eta_delta},
                {"d_floor", c.schedule.d_floor},
                {"delta_floor", c.schedule.delta_floor}}},
              {"stopping",
               {{"max_iterations", c.stopping.max_iterations}, {"delta_criterion", c.stopping.delta_criterion}}},
              {"experiment",
               {{"trials", c.experiment.trials},
                {"base_seed", c.experiment.base_seed},
                {"workers", c.experiment.workers},
                {"bin_count", c.experiment.bin_count},
                {"initial_position", initial}}}};
}

}  // namespace beetle
