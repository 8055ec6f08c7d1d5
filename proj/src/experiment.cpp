#include "beetle/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "beetle/bas.hpp"
#include "beetle/bsas.hpp"
#include "beetle/dataset_io.hpp"
#include "beetle/rc_model.hpp"
#include "beetle/test_functions.hpp"
#include "beetle/text_io.hpp"

namespace beetle {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

BuiltProblem build_rc_problem(const ExperimentConfig& config) {
  const ProblemConfig& pc = config.problem;
  rc::RcDataset dataset;
  std::string id;
  if (pc.dataset) {
    std::filesystem::path path = *pc.dataset;
    if (path.is_relative()) path = config.base_dir / path;
    if (!std::filesystem::is_regular_file(path)) throw ConfigError("dataset '" + path.string() + "' not found");
    try {
      dataset = rc::read_dataset(path);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    id = "file:" + *pc.dataset;
  } else {
    dataset = rc::generate_synthetic_dataset(pc.truth, pc.synthetic);
    id = "synthetic:seed=" + std::to_string(pc.synthetic.seed) +
         ",noise_std=" + io::format_number(pc.synthetic.noise_std);
  }

  rc::SearchBounds bounds;
  if (pc.center)
    bounds.center = *pc.center;
  else if (dataset.truth)
    bounds.center = *dataset.truth;
  else
    throw ConfigError("problem.center is required when the dataset carries no truth parameters");
  bounds.temperature_band = pc.temperature_band;
  bounds.multiplicative_band = pc.multiplicative_band;
  return {rc::identification_problem(std::move(dataset), bounds, pc.penalty), id};
}

}  // namespace

BuiltProblem build_problem(const ExperimentConfig& config) {
  const ProblemConfig& pc = config.problem;
  switch (pc.kind) {
    case ProblemKind::goldstein_price: return {goldstein_price_problem(), "goldstein_price"};
    case ProblemKind::michalewicz:
      return {michalewicz_problem(pc.dimension, pc.michalewicz_m), "michalewicz:n=" + std::to_string(pc.dimension)};
    case ProblemKind::sphere:
      return {sphere_problem(pc.dimension, pc.sphere_lower, pc.sphere_upper),
              "sphere:n=" + std::to_string(pc.dimension)};
    case ProblemKind::rc: return build_rc_problem(config);
  }
  throw ConfigError("unsupported problem type");
}

RunRecord run_trial(const SearchProblem& problem, const ExperimentConfig& config, const Variant& variant,
                    std::uint64_t seed) {
  try {
    if (variant.algorithm == Algorithm::bas) {
      BasConfig bas;
      bas.schedule = config.schedule;
      bas.stopping = config.stopping;
      bas.sign_convention = config.algorithm.sign_convention;
      bas.initial_position = config.experiment.initial_position;
      return run_bas(problem, bas, seed);
    }
    BsasConfig bsas;
    bsas.k = variant.k;
    bsas.p_delta = config.algorithm.p_delta;
    bsas.schedule = config.schedule;
    bsas.stopping = config.stopping;
    bsas.sign_convention = config.algorithm.sign_convention;
    bsas.candidate_rule = config.algorithm.candidate_rule;
    bsas.initial_position = config.experiment.initial_position;
    return run_bsas(problem, bsas, seed);
  } catch (const RunFailure& failure) {
    return failure.partial();
  }
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const BuiltProblem built = build_problem(config);

  ExperimentReport report;
  report.variants = config.algorithm.variants;
  report.dataset_id = built.dataset_id;
  report.config_snapshot = to_json(config);
  report.config_snapshot["dataset_id"] = built.dataset_id;

  const auto n_variants = report.variants.size();
  const auto n_trials = static_cast<std::size_t>(config.experiment.trials);
  report.trials.assign(n_variants, std::vector<RunRecord>(n_trials));

  // Each task owns its slot; scheduling cannot change any result.
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t task = next++; task < n_variants * n_trials; task = next++) {
      const std::size_t v = task / n_trials;
      const std::size_t i = task % n_trials;
      try {
        report.trials[v][i] =
            run_trial(built.problem, config, report.variants[v], config.experiment.base_seed + i);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(config.experiment.workers), n_variants * n_trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<RunRecord> all;
  for (const auto& list : report.trials) all.insert(all.end(), list.begin(), list.end());
  report.summary = summarize(all, config.experiment.bin_count);
  return report;
}

Summary summarize(const std::vector<RunRecord>& records, int bin_count) {
  if (records.empty()) throw std::invalid_argument("summarize: no records");
  if (bin_count < 1) throw std::invalid_argument("summarize: bin_count must be positive");

  std::vector<Variant> order;
  std::vector<std::vector<double>> values;
  std::vector<int> failures;
  for (const auto& r : records) {
    const Variant v{r.algorithm, r.k};
    auto it = std::find(order.begin(), order.end(), v);
    if (it == order.end()) {
      order.push_back(v);
      values.emplace_back();
      failures.push_back(0);
      it = order.end() - 1;
    }
    const auto idx = static_cast<std::size_t>(it - order.begin());
    if (!r.failure && std::isfinite(r.f_best_final))
      values[idx].push_back(r.f_best_final);
    else
      ++failures[idx];
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& vals : values)
    for (double x : vals) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  const bool any = lo <= hi;

  Summary s;
  s.bin_count = bin_count;
  if (any) {
    s.bin_edges.resize(static_cast<std::size_t>(bin_count) + 1);
    for (int j = 0; j <= bin_count; ++j) s.bin_edges[static_cast<std::size_t>(j)] = lo + (hi - lo) * j / bin_count;
    s.bin_edges.back() = hi;
  }

  for (std::size_t v = 0; v < order.size(); ++v) {
    const auto& vals = values[v];
    VariantSummary vs;
    vs.variant = order[v];
    vs.failures = failures[v];
    vs.trials = static_cast<int>(vals.size()) + vs.failures;
    vs.histogram.assign(static_cast<std::size_t>(bin_count), 0);
    if (vals.empty()) {
      vs.mean = vs.sd = vs.min = vs.max = kNaN;
    } else {
      double sum = 0;
      for (double x : vals) sum += x;
      vs.mean = sum / static_cast<double>(vals.size());
      double ss = 0;
      for (double x : vals) ss += (x - vs.mean) * (x - vs.mean);
      vs.sd = std::sqrt(ss / static_cast<double>(vals.size()));
      vs.min = *std::min_element(vals.begin(), vals.end());
      vs.max = *std::max_element(vals.begin(), vals.end());
      for (double x : vals) {
        int bin = 0;
        if (hi > lo) bin = std::min(bin_count - 1, static_cast<int>(std::floor((x - lo) / (hi - lo) * bin_count)));
        ++vs.histogram[static_cast<std::size_t>(bin)];
      }
    }
    s.variants.push_back(std::move(vs));
  }
  return s;
}

json to_json(const Summary& s) {
  json variants = json::array();
  for (const auto& v : s.variants) {
    variants.push_back({{"algorithm", to_string(v.variant.algorithm)},
                        {"k", v.variant.k},
                        {"trials", v.trials},
                        {"failures", v.failures},
                        {"mean", v.mean},
                        {"sd", v.sd},
                        {"min", v.min},
                        {"max", v.max},
                        {"histogram", v.histogram}});
  }
  return json{{"bin_count", s.bin_count}, {"bin_edges", s.bin_edges}, {"variants", variants}};
}

namespace {

double number_or_nan(const json& j) { return j.is_null() ? kNaN : j.get<double>(); }

}  // namespace

Summary summary_from_json(const json& j) {
  Summary s;
  s.bin_count = j.at("bin_count").get<int>();
  s.bin_edges = j.at("bin_edges").get<std::vector<double>>();
  for (const auto& v : j.at("variants")) {
    VariantSummary vs;
    vs.variant = {parse_algorithm(v.at("algorithm").get<std::string>()), v.at("k").get<int>()};
    vs.trials = v.at("trials").get<int>();
    vs.failures = v.at("failures").get<int>();
    vs.mean = number_or_nan(v.at("mean"));
    vs.sd = number_or_nan(v.at("sd"));
    vs.min = number_or_nan(v.at("min"));
    vs.max = number_or_nan(v.at("max"));
    vs.histogram = v.at("histogram").get<std::vector<int>>();
    s.variants.push_back(std::move(vs));
  }
  return s;
}

std::string trials_csv(const ExperimentReport& report) {
  std::string out = kTrialsHeader;
  out += '\n';
  for (const auto& list : report.trials)
    for (const auto& r : list) {
      out += to_string(r.algorithm);
      out += ',' + std::to_string(r.k);
      out += ',' + std::to_string(r.seed);
      out += ',' + io::format_number(r.failure ? kNaN : r.f_best_final);
      out += ',' + std::to_string(r.iterations);
      out += ',' + std::to_string(r.evaluations);
      out += ',' + std::to_string(r.wall_time_ms);
      out += '\n';
    }
  return out;
}

std::vector<RunRecord> trials_from_csv(std::string_view text) {
  std::vector<RunRecord> out;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kTrialsHeader) throw std::invalid_argument("trials header must be '" + std::string(kTrialsHeader) + "'");
      header_seen = true;
      continue;
    }
    const auto f = io::split_csv_line(line);
    if (f.size() != 7) throw std::invalid_argument("trials line " + std::to_string(line_no) + ": expected 7 fields");
    try {
      RunRecord r;
      r.algorithm = parse_algorithm(f[0]);
      r.k = static_cast<int>(io::parse_integer(f[1]));
      r.seed = static_cast<std::uint64_t>(io::parse_integer(f[2]));
      r.f_best_final = io::parse_number(f[3]);
      r.iterations = io::parse_integer(f[4]);
      r.evaluations = io::parse_integer(f[5]);
      r.wall_time_ms = io::parse_integer(f[6]);
      out.push_back(std::move(r));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("trials line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw std::invalid_argument("trials file is empty");
  return out;
}

void write_outputs(const ExperimentReport& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());
  io::write_file(out_dir / "trials.csv", trials_csv(report));
  io::write_file(out_dir / "summary.json", to_json(report.summary).dump(2) + "\n");
  io::write_file(out_dir / "config_snapshot.json", report.config_snapshot.dump(2) + "\n");
}

}  // namespace beetle
