#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rtlgauge/backend.hpp"
#include "rtlgauge/scoring.hpp"
#include "rtlgauge/taxonomy.hpp"

namespace rtlgauge {

constexpr int kJournalSchemaVersion = 1;

struct InferenceMeta {
  bool present = false;
  double cost_usd = 0.0;
  long reasoning_tokens = 0;
  long completion_tokens = 0;
  double throughput_tok_s = 0.0;
  double ttft_s = 0.0;
};

struct GenerationRecord {
  std::string raw_response;
  std::optional<VerilogSource> extracted;
  std::string extraction_error;  // set when extracted is empty
  InferenceMeta inference;
  std::optional<double> sampling_temperature;  // live mode: settings actually sent
  std::optional<long> sampling_max_tokens;
};

// Full outcome of one generation attempt. Key: (model, task, attempt).
// failure_tag records the shipped-rules classification at run time; reports
// always reclassify from the rule file they are given.
struct AttemptRecord {
  std::string model;
  std::string task;
  int attempt = 0;  // 1..K
  GenerationRecord gen;
  GateTrace trace;
  std::map<std::string, SynthMetrics> metrics_by_library;
  std::optional<FailureTag> failure_tag;
  std::string failure_rules_version;
  bool infra = false;
  std::string infra_reason;
  long started_ms = 0;
  long elapsed_ms = 0;

  std::string key() const { return model + "\x1f" + task + "\x1f" + std::to_string(attempt); }
  bool passed_all_gates() const { return trace.passed_all(); }
};

std::string attempt_to_json_line(const AttemptRecord& r);
AttemptRecord attempt_from_json_line(const std::string& line);

// Line-delimited journal. Append-only during a run; records are never
// rewritten. An infra record may be superseded by a later record with the
// same key (the re-run); effective_records keeps the last record per key.
class Journal {
 public:
  static std::vector<AttemptRecord> read(const std::filesystem::path& path);
  static std::vector<AttemptRecord> effective_records(std::vector<AttemptRecord> all);
  // Canonical byte stream: records sorted by (model, task, attempt), one
  // deterministic JSON object per line.
  static void write_canonical(const std::filesystem::path& path,
                              std::vector<AttemptRecord> records);

  class Writer {
   public:
    explicit Writer(const std::filesystem::path& path);
    ~Writer();
    void append(const AttemptRecord& r);

   private:
    std::mutex mu_;
    FILE* f_;
  };
};

// Golden reference metrics per (task, library), plus validity flags.
struct GoldenEntry {
  bool valid = false;
  std::string reason;  // why invalid
  std::map<std::string, SynthMetrics> by_library;
};

struct GoldenCache {
  int schema_version = kJournalSchemaVersion;
  std::map<std::string, GoldenEntry> tasks;

  void save(const std::filesystem::path& path) const;
  static GoldenCache load(const std::filesystem::path& path);

  std::optional<SynthMetrics> metrics_for(const std::string& task_id,
                                          const std::string& library_id) const;
};

}  // namespace rtlgauge
