#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtlgauge/backend.hpp"
#include "rtlgauge/endpoints.hpp"
#include "rtlgauge/gates.hpp"
#include "rtlgauge/journal.hpp"
#include "rtlgauge/manifest.hpp"

namespace rtlgauge {

// A model participating in a campaign: live endpoint or pregen directory.
struct ModelSpec {
  std::string id;
  std::string access_type;  // proprietary | open_weight
  std::optional<ModelEndpoint> endpoint;  // empty in pregen mode
};

struct CampaignOptions {
  int k = 5;
  int workers = 2;
  long max_jobs = 0;  // testing/ops knob: stop after N new records (0 = all)
  std::vector<std::string> libraries;  // extra libraries synthesized for passing designs
  std::filesystem::path pregen_dir;    // pregen mode when non-empty
  bool deterministic_clock = false;    // mock runs: zero timestamps for byte-stable journals
  RetryPolicy retry;
};

struct CampaignStats {
  long executed = 0;
  long skipped_resume = 0;
  long infra_failures = 0;
};

// Runs M x T x K attempts under a bounded worker pool, appending to the
// journal as attempts complete. Resumable: already-journaled keys are
// skipped (infra records are re-run). On full completion the journal file is
// rewritten in canonical (model, task, attempt) order.
CampaignStats run_campaign(const Manifest& manifest, const std::vector<ModelSpec>& models,
                           Backend& backend, const ToolchainConfig& toolchain,
                           const CampaignOptions& options,
                           const std::filesystem::path& journal_path);

// Synthesizes every golden through the identical gate path (all three gates
// under the default library, synthesis under each extra library). Goldens
// that fail any stage are flagged invalid and demoted to coverage-only.
GoldenCache compute_golden_metrics(const Manifest& manifest, Backend& backend,
                                   const ToolchainConfig& toolchain,
                                   const std::vector<std::string>& extra_libraries = {});

struct InferenceSummary {
  std::string model;
  int n = 0;
  double median_cost_usd = 0.0;
  double reasoning_ratio = 0.0;  // sum reasoning / sum (reasoning + completion)
  bool non_reasoning = false;    // every attempt reported zero reasoning tokens
  double median_throughput_tok_s = 0.0;
  double median_ttft_s = 0.0;
  double completion_tokens_p25 = 0.0;
  double completion_tokens_p50 = 0.0;
  double completion_tokens_p75 = 0.0;
};

std::vector<InferenceSummary> summarize_inference(const std::vector<AttemptRecord>& records);

}  // namespace rtlgauge
