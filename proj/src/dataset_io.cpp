#include "beetle/dataset_io.hpp"

#include <filesystem>
#include <stdexcept>

#include "beetle/config.hpp"
#include "beetle/text_io.hpp"

namespace beetle::rc {

using nlohmann::json;

std::filesystem::path metadata_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p += ".meta.json";
  return p;
}

std::string dataset_to_csv(const RcDataset& dataset) {
  dataset.validate();
  std::string out = kDatasetHeader;
  out += '\n';
  const RcForcing& f = dataset.forcing;
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    for (double v : {f.timestamps[j], f.T_out[j], f.Q_in[j], f.Q_c[j], f.Q_solar[j]}) {
      out += io::format_number(v);
      out += ',';
    }
    out += io::format_number(dataset.T_in_obs[j]);
    out += '\n';
  }
  return out;
}

RcDataset dataset_from_csv(std::string_view text) {
  RcDataset d;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
      if (line != kDatasetHeader)
        throw std::invalid_argument("dataset header must be '" + std::string(kDatasetHeader) + "'");
      header_seen = true;
      continue;
    }
    const auto fields = io::split_csv_line(line);
    if (fields.size() != 6)
      throw std::invalid_argument("dataset line " + std::to_string(line_no) + ": expected 6 fields");
    try {
      d.forcing.timestamps.push_back(io::parse_number(fields[0]));
      d.forcing.T_out.push_back(io::parse_number(fields[1]));
      d.forcing.Q_in.push_back(io::parse_number(fields[2]));
      d.forcing.Q_c.push_back(io::parse_number(fields[3]));
      d.forcing.Q_solar.push_back(io::parse_number(fields[4]));
      d.T_in_obs.push_back(io::parse_number(fields[5]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("dataset line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw std::invalid_argument("dataset is empty");
  d.validate();
  return d;
}

void write_dataset(const RcDataset& dataset, const std::filesystem::path& csv_path) {
  io::write_file(csv_path, dataset_to_csv(dataset));
  json meta{{"samples", dataset.size()},
            {"step_s", dataset.forcing.step()},
            {"truth", dataset.truth ? to_json(*dataset.truth) : json(nullptr)},
            {"synthetic", dataset.generation ? to_json(*dataset.generation) : json(nullptr)}};
  io::write_file(metadata_path(csv_path), meta.dump(2) + "\n");
}

RcDataset read_dataset(const std::filesystem::path& csv_path) {
  RcDataset d;
  try {
    d = dataset_from_csv(io::read_file(csv_path));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("'" + csv_path.string() + "': " + e.what());
  }
  const auto meta_path = metadata_path(csv_path);
  if (std::filesystem::exists(meta_path)) {
    try {
      const json meta = json::parse(io::read_file(meta_path));
      if (meta.contains("truth") && !meta["truth"].is_null()) d.truth = rc_parameters_from_json(meta["truth"]);
      if (meta.contains("synthetic") && !meta["synthetic"].is_null())
        d.generation = synthetic_spec_from_json(meta["synthetic"]);
    } catch (const std::exception& e) {
      throw std::invalid_argument("'" + meta_path.string() + "': " + e.what());
    }
  }
  return d;
}

}  // namespace beetle::rc
