#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtlgauge/frontend.hpp"

namespace rtlgauge {

class ManifestError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One benchmark problem. Paths are stored resolved against the manifest
// file's directory.
struct Task {
  std::string id;
  std::string benchmark;  // verilogeval | rtllm
  std::string category;
  std::filesystem::path prompt_path;
  std::filesystem::path testbench_path;
  std::optional<std::filesystem::path> golden_rtl_path;
  std::string expected_top;
  std::vector<std::string> pass_patterns;  // optional per-task overrides
  std::vector<std::string> fail_patterns;
  ComplexityWeight weight;
};

struct Manifest {
  int schema_version = 1;
  std::filesystem::path root;
  std::vector<Task> tasks;

  // Loads and validates: paths exist, expected_top is an identifier, ids are
  // unique. Complexity weights are computed from golden dependency-edge
  // counts (an explicit "raw_edges" field overrides; no golden and no
  // override counts as 0 edges).
  static Manifest load(const std::filesystem::path& path);

  const Task* find(const std::string& id) const;
};

}  // namespace rtlgauge
