#pragma once

#include <filesystem>
#include <string>

#include "beetle/rc_model.hpp"

namespace beetle::rc {

inline constexpr const char* kDatasetHeader = "t_s,T_out,Q_in,Q_c,Q_solar,T_in_obs";

/// Companion metadata lives next to the CSV as "<file>.meta.json".
std::filesystem::path metadata_path(const std::filesystem::path& csv_path);

std::string dataset_to_csv(const RcDataset& dataset);
RcDataset dataset_from_csv(std::string_view text);

/// Writes the CSV and its metadata file (truth parameters and generation settings).
void write_dataset(const RcDataset& dataset, const std::filesystem::path& csv_path);

/// Reads the CSV; truth and generation settings come from the metadata file when present.
RcDataset read_dataset(const std::filesystem::path& csv_path);

}  // namespace beetle::rc
