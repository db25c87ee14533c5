#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rtlgauge {

// FNV-1a, used for mock fingerprints and deterministic pseudo-metrics.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
bool starts_with(std::string_view s, std::string_view prefix);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// Fixed-decimal formatting ("85.1"); reports round-trip through this.
std::string format_fixed(double value, int decimals);

double median(std::vector<double> values);
// Linear-interpolation quantile, q in [0,1]. Empty input -> 0.
double quantile(std::vector<double> values, double q);

}  // namespace rtlgauge
