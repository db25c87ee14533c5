#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "rtlgauge/backend.hpp"
#include "rtlgauge/external_tools.hpp"
#include "rtlgauge/gates.hpp"
#include "rtlgauge/report.hpp"
#include "rtlgauge/runner.hpp"
#include "rtlgauge/scoring.hpp"

namespace rtlgauge {

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Top-level harness configuration (versioned, human-editable JSON).
// Without a config file the harness assumes external tools; --mock opts into
// the deterministic backend explicitly, so real runs never silently score
// mock numbers.
struct Config {
  int schema_version = 1;
  std::string mode = "external";  // mock | external
  ToolchainConfig toolchain;
  std::vector<std::string> libraries;  // first entry is the default
  ExternalToolsConfig external;
  std::filesystem::path mock_table;  // optional table file for MockBackend
  WeightConfig weights;
  TierThresholds tiers;
  int k = 5;
  int workers = 2;
  RetryPolicy retry;

  static Config load(const std::filesystem::path& path);
  static Config defaults() { return Config{}; }

  std::unique_ptr<Backend> make_backend(bool force_mock) const;
};

}  // namespace rtlgauge
