#include "rtlgauge/endpoints.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "rtlgauge/util.hpp"

namespace rtlgauge {

using nlohmann::json;

ModelsConfig ModelsConfig::load(const std::filesystem::path& path) {
  json j = json::parse(read_text_file(path));
  ModelsConfig cfg;
  if (!j.contains("models") || !j["models"].is_array())
    throw std::runtime_error("models config: missing 'models' array");
  for (const auto& jm : j["models"]) {
    ModelEndpoint e;
    e.id = jm.value("id", "");
    if (e.id.empty()) throw std::runtime_error("models config: model with empty id");
    e.access_type = jm.value("access_type", "");
    if (e.access_type != "proprietary" && e.access_type != "open_weight")
      throw std::runtime_error("model '" + e.id +
                               "': access_type must be proprietary or open_weight");
    e.base_url = jm.value("base_url", e.base_url);
    e.api_path = jm.value("api_path", e.api_path);
    e.model_name = jm.value("model_name", e.id);
    e.auth_env = jm.value("auth_env", "");
    if (jm.contains("temperature")) e.temperature = jm["temperature"].get<double>();
    if (jm.contains("max_tokens")) e.max_tokens = jm["max_tokens"].get<int>();
    cfg.models.push_back(std::move(e));
  }
  return cfg;
}

namespace {

bool retryable_status(int status) {
  return status == 429 || (status >= 500 && status < 600);
}

long read_long(const json& j, std::initializer_list<const char*> path) {
  const json* cur = &j;
  for (const char* key : path) {
    if (!cur->is_object() || !cur->contains(key)) return 0;
    cur = &(*cur)[key];
  }
  return cur->is_number() ? cur->get<long>() : 0;
}

}  // namespace

ChatResult chat_complete(const ModelEndpoint& endpoint, const std::string& prompt,
                         const RetryPolicy& retry) {
  ChatResult res;
  auto sleeper = retry.sleeper
                     ? retry.sleeper
                     : [](double s) { std::this_thread::sleep_for(std::chrono::duration<double>(s)); };

  json body;
  body["model"] = endpoint.model_name;
  body["messages"] = json::array({{{"role", "user"}, {"content", prompt}}});
  if (endpoint.temperature) body["temperature"] = *endpoint.temperature;
  if (endpoint.max_tokens) body["max_tokens"] = *endpoint.max_tokens;
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!endpoint.auth_env.empty()) {
    const char* token = std::getenv(endpoint.auth_env.c_str());
    if (!token || !*token) {
      res.error = "auth env var '" + endpoint.auth_env + "' is not set";
      return res;
    }
    headers.emplace("Authorization", std::string("Bearer ") + token);
  }

  for (int attempt = 1; attempt <= retry.max_attempts; ++attempt) {
    res.attempts_used = attempt;
    auto t0 = std::chrono::steady_clock::now();
    httplib::Client client(endpoint.base_url);
    client.set_connection_timeout(30);
    client.set_read_timeout(600);
    auto http = client.Post(endpoint.api_path, headers, payload, "application/json");
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool transport_failure = !http || retryable_status(http->status);
    if (!transport_failure) {
      res.http_status = http->status;
      if (http->status != 200) {
        res.error = "HTTP " + std::to_string(http->status) + ": " + http->body;
        return res;  // content/config problem; never retried
      }
      try {
        json j = json::parse(http->body);
        res.content = j["choices"][0]["message"]["content"].get<std::string>();
      } catch (const std::exception& e) {
        res.error = std::string("malformed completion response: ") + e.what();
        return res;
      }
      json j = json::parse(http->body);
      res.inference.present = true;
      res.inference.completion_tokens = read_long(j, {"usage", "completion_tokens"});
      long reasoning = read_long(j, {"usage", "completion_tokens_details", "reasoning_tokens"});
      if (reasoning == 0) reasoning = read_long(j, {"usage", "reasoning_tokens"});
      res.inference.reasoning_tokens = reasoning;
      if (j.contains("usage") && j["usage"].contains("cost") && j["usage"]["cost"].is_number())
        res.inference.cost_usd = j["usage"]["cost"].get<double>();
      res.inference.ttft_s = wall;  // non-streaming: first token == full response
      if (wall > 0 && res.inference.completion_tokens > 0)
        res.inference.throughput_tok_s =
            static_cast<double>(res.inference.completion_tokens) / wall;
      res.ok = true;
      return res;
    }

    res.error = http ? "HTTP " + std::to_string(http->status)
                     : "transport error: " + httplib::to_string(http.error());
    if (attempt < retry.max_attempts) {
      size_t idx = static_cast<size_t>(attempt - 1);
      double delay = idx < retry.backoff_s.size() ? retry.backoff_s[idx]
                                                  : retry.backoff_s.empty() ? 1.0
                                                                            : retry.backoff_s.back();
      sleeper(delay);
    }
  }
  return res;  // retries exhausted; caller records an infrastructure failure
}

}  // namespace rtlgauge
