#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace beetle::io {

/// Shortest decimal form that parses back to the same double ('.' separator).
std::string format_number(double v);

double parse_number(std::string_view field);
long long parse_integer(std::string_view field);

std::vector<std::string_view> split_csv_line(std::string_view line);

std::string read_file(const std::filesystem::path& path);

/// Writes `contents` verbatim; errors mention the path.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace beetle::io
