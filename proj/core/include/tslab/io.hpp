#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tslab {

/// Shortest decimal form that round-trips a double ("%.17g" fallback).
std::string format_double(double x);

/// Fixed-point with `decimals` digits, e.g. for report tables.
std::string format_fixed(double x, int decimals);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Splits one CSV record on commas. No quoting support; trailing '\r' is
/// stripped from the last field.
std::vector<std::string> split_csv_line(std::string_view line);

std::string_view trim(std::string_view s);

void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Parses a full string as double; returns false on trailing junk or
/// empty input. NaN/Inf spellings are rejected.
bool parse_double(std::string_view text, double& out);

}  // namespace tslab
