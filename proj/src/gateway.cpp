#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "gridmind/gateway.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace gridmind {

using nlohmann::json;

std::string to_string(RequestTag tag) {
  switch (tag) {
    case RequestTag::value: return "value";
    case RequestTag::world_model: return "world_model";
    case RequestTag::rule_induction: return "rule_induction";
    case RequestTag::playbook: return "playbook";
    case RequestTag::action_only: return "action_only";
  }
  return "value";
}

namespace {

json request_to_json(const GenerationRequest& request) {
  return json{{"prompt", request.prompt},
              {"max_tokens", request.max_tokens},
              {"temperature", request.temperature},
              {"stop", request.stop_sequences},
              {"tag", to_string(request.tag)}};
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, data.data(), data.size());
  EVP_DigestFinal_ex(ctx, digest, &digest_len);
  EVP_MD_CTX_free(ctx);
  static const char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(digest_len * 2);
  for (unsigned int i = 0; i < digest_len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0x0f]);
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string env_or_empty(const char* name) {
  const char* value = std::getenv(name);
  return value ? value : "";
}

}  // namespace

std::string prompt_hash(const GenerationRequest& request) {
  return sha256_hex(request_to_json(request).dump());
}

GenerationResponse ScriptedBackend::generate(const GenerationRequest& request) {
  auto start = std::chrono::steady_clock::now();
  GenerationResponse response;
  response.text = handler_(request);
  response.backend_id = id();
  response.latency_ms = elapsed_ms(start);
  return response;
}

RemoteConfig remote_config_from_env() {
  RemoteConfig config;
  config.base_url = env_or_empty("GRIDMIND_ENDPOINT");
  config.api_key = env_or_empty("GRIDMIND_API_KEY");
  config.model = env_or_empty("GRIDMIND_MODEL");
  return config;
}

RemoteBackend::RemoteBackend(RemoteConfig config) : config_(std::move(config)) {
  if (config_.base_url.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "remote backend: endpoint not configured (set GRIDMIND_ENDPOINT)");
  }
}

GenerationResponse RemoteBackend::generate(const GenerationRequest& request) {
  // Split "scheme://host[:port]/path" into client origin and path prefix.
  std::string origin = config_.base_url;
  std::string path_prefix;
  size_t scheme_end = origin.find("://");
  size_t path_start = origin.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
  if (path_start != std::string::npos) {
    path_prefix = origin.substr(path_start);
    origin = origin.substr(0, path_start);
  }
  while (!path_prefix.empty() && path_prefix.back() == '/') path_prefix.pop_back();
  std::string path = path_prefix + "/chat/completions";

  json body{{"model", config_.model},
            {"messages", json::array({json{{"role", "user"}, {"content", request.prompt}}})},
            {"max_tokens", request.max_tokens},
            {"temperature", request.temperature}};
  if (!request.stop_sequences.empty()) body["stop"] = request.stop_sequences;
  const std::string payload = body.dump();

  std::string last_error;
  for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
    if (attempt > 0) {
      auto delay = std::chrono::duration<double>(config_.backoff_initial_seconds *
                                                 static_cast<double>(1 << (attempt - 1)));
      std::this_thread::sleep_for(delay);
    }
    attempts_made_.fetch_add(1);
    auto start = std::chrono::steady_clock::now();

    httplib::Client client(origin);
    client.set_connection_timeout(config_.connect_timeout_seconds, 0);
    client.set_read_timeout(config_.read_timeout_seconds, 0);
    httplib::Headers headers;
    if (!config_.api_key.empty()) {
      headers.emplace("Authorization", "Bearer " + config_.api_key);
    }
    auto http_result = client.Post(path, headers, payload, "application/json");

    if (!http_result) {
      last_error = "transport error: " + httplib::to_string(http_result.error());
      continue;
    }
    if (http_result->status == 429 || http_result->status >= 500) {
      last_error = "status " + std::to_string(http_result->status);
      continue;
    }
    if (http_result->status != 200) {
      throw Error(ErrorCode::backend_unreachable,
                  "remote backend: status " + std::to_string(http_result->status) + ": " +
                      http_result->body.substr(0, 512));
    }

    json parsed;
    try {
      parsed = json::parse(http_result->body);
    } catch (const json::exception& e) {
      last_error = std::string("bad response JSON: ") + e.what();
      continue;
    }
    if (!parsed.contains("choices") || !parsed["choices"].is_array() ||
        parsed["choices"].empty()) {
      last_error = "response has no choices";
      continue;
    }
    GenerationResponse response;
    const auto& choice = parsed["choices"][0];
    if (choice.contains("message") && choice["message"].contains("content") &&
        choice["message"]["content"].is_string()) {
      response.text = choice["message"]["content"].get<std::string>();
    } else if (choice.contains("text") && choice["text"].is_string()) {
      response.text = choice["text"].get<std::string>();
    } else {
      last_error = "choice has no content";
      continue;
    }
    if (parsed.contains("usage") && parsed["usage"].is_object()) {
      const auto& usage = parsed["usage"];
      if (usage.contains("prompt_tokens") && usage["prompt_tokens"].is_number()) {
        response.prompt_tokens = usage["prompt_tokens"].get<long>();
      }
      if (usage.contains("completion_tokens") && usage["completion_tokens"].is_number()) {
        response.completion_tokens = usage["completion_tokens"].get<long>();
      }
    }
    response.backend_id = id();
    response.latency_ms = elapsed_ms(start);
    return response;
  }
  throw Error(ErrorCode::backend_unreachable,
              "remote backend: exhausted " + std::to_string(config_.max_attempts) +
                  " attempts; last error: " + last_error);
}

ReplayStore::ReplayStore(std::filesystem::path dir, bool create) : dir_(std::move(dir)) {
  if (create) {
    std::filesystem::create_directories(dir_);
  } else if (!std::filesystem::is_directory(dir_)) {
    throw Error(ErrorCode::not_found, "replay store: no such directory: " + dir_.string());
  }
}

bool ReplayStore::contains(const std::string& hash) const {
  return std::filesystem::exists(dir_ / (hash + ".json"));
}

std::optional<GenerationResponse> ReplayStore::load(const std::string& hash) const {
  auto path = dir_ / (hash + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json entry;
  try {
    in >> entry;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::corrupt_store,
                "replay store: bad entry " + path.string() + ": " + e.what());
  }
  GenerationResponse response;
  response.text = entry.at("response").at("text").get<std::string>();
  if (entry["response"].contains("prompt_tokens") &&
      !entry["response"]["prompt_tokens"].is_null()) {
    response.prompt_tokens = entry["response"]["prompt_tokens"].get<long>();
  }
  if (entry["response"].contains("completion_tokens") &&
      !entry["response"]["completion_tokens"].is_null()) {
    response.completion_tokens = entry["response"]["completion_tokens"].get<long>();
  }
  return response;
}

void ReplayStore::save(const std::string& hash, const GenerationRequest& request,
                       const GenerationResponse& response) {
  std::lock_guard<std::mutex> lock(write_mutex_);
  json entry{{"request", request_to_json(request)},
             {"response",
              {{"text", response.text},
               {"prompt_tokens",
                response.prompt_tokens ? json(*response.prompt_tokens) : json(nullptr)},
               {"completion_tokens",
                response.completion_tokens ? json(*response.completion_tokens) : json(nullptr)}}}};
  auto path = dir_ / (hash + ".json");
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "replay store: cannot write " + path.string());
  out << entry.dump(2) << "\n";
}

GenerationResponse RecordBackend::generate(const GenerationRequest& request) {
  GenerationResponse response = inner_->generate(request);
  store_->save(prompt_hash(request), request, response);
  response.backend_id = id();
  return response;
}

GenerationResponse ReplayBackend::generate(const GenerationRequest& request) {
  const std::string hash = prompt_hash(request);
  auto response = store_->load(hash);
  if (!response) {
    throw Error(ErrorCode::replay_miss,
                "replay: no recorded response for request " + hash +
                    " (nondeterministic prompt construction?)");
  }
  response->backend_id = id();
  response->cache_hit = true;
  return *response;
}

Gateway::Gateway(std::shared_ptr<Backend> backend, GatewayOptions options)
    : backend_(std::move(backend)), options_(options) {
  if (!backend_) throw Error(ErrorCode::invalid_argument, "gateway: backend required");
  if (options_.max_concurrent_requests < 1) options_.max_concurrent_requests = 1;
}

GenerationResponse Gateway::generate(const GenerationRequest& request) {
  if (options_.token_budget && tokens_used_.load() >= *options_.token_budget) {
    throw Error(ErrorCode::budget_exceeded,
                "gateway: token budget of " + std::to_string(*options_.token_budget) +
                    " exhausted");
  }
  {
    std::unique_lock<std::mutex> lock(slot_mutex_);
    slot_cv_.wait(lock, [&] { return in_flight_ < options_.max_concurrent_requests; });
    ++in_flight_;
  }
  GenerationResponse response;
  try {
    response = backend_->generate(request);
  } catch (...) {
    {
      std::lock_guard<std::mutex> lock(slot_mutex_);
      --in_flight_;
    }
    slot_cv_.notify_one();
    throw;
  }
  {
    std::lock_guard<std::mutex> lock(slot_mutex_);
    --in_flight_;
  }
  slot_cv_.notify_one();

  long used = 0;
  if (response.prompt_tokens || response.completion_tokens) {
    used = response.prompt_tokens.value_or(0) + response.completion_tokens.value_or(0);
  } else {
    used = static_cast<long>((request.prompt.size() + response.text.size()) / 4);
  }
  tokens_used_.fetch_add(used);
  return response;
}

}  // namespace gridmind
