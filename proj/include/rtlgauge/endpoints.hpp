#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rtlgauge/journal.hpp"

namespace rtlgauge {

// One chat-completion endpoint (OpenRouter-style). Auth tokens come from the
// named environment variable; secrets are never stored in files.
struct ModelEndpoint {
  std::string id;
  std::string access_type;  // proprietary | open_weight
  std::string base_url = "http://localhost:8080";
  std::string api_path = "/api/v1/chat/completions";
  std::string model_name;
  std::string auth_env;
  std::optional<double> temperature;
  std::optional<int> max_tokens;
};

struct ModelsConfig {
  std::vector<ModelEndpoint> models;
  static ModelsConfig load(const std::filesystem::path& path);
};

struct RetryPolicy {
  int max_attempts = 3;
  std::vector<double> backoff_s = {1.0, 4.0, 16.0};
  // injectable for tests; defaults to a real sleep
  std::function<void(double)> sleeper;
};

struct ChatResult {
  bool ok = false;
  std::string content;      // assistant message text
  InferenceMeta inference;  // whatever the provider reported, plus timing
  std::string error;
  int http_status = 0;
  int attempts_used = 0;
};

// Blocking chat-completion call with bounded exponential backoff. Retries
// only transport-level failures (connect errors, 5xx, 429, timeouts), never
// on response content.
ChatResult chat_complete(const ModelEndpoint& endpoint, const std::string& prompt,
                         const RetryPolicy& retry = {});

}  // namespace rtlgauge
