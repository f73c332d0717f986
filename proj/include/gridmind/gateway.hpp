#pragma once

#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gridmind/types.hpp"

namespace gridmind {

// Which parser consumes the response; also recorded in request logs so call
// counts per decision step can be audited.
enum class RequestTag { value, world_model, rule_induction, playbook, action_only };

std::string to_string(RequestTag tag);

struct GenerationRequest {
  std::string prompt;
  int max_tokens = 8192;
  double temperature = 0.7;
  std::vector<std::string> stop_sequences;
  RequestTag tag = RequestTag::value;
};

struct GenerationResponse {
  std::string text;
  std::string backend_id;
  double latency_ms = 0.0;
  std::optional<long> prompt_tokens;
  std::optional<long> completion_tokens;
  bool cache_hit = false;
};

// Stable content hash (SHA-256, lowercase hex) of the full request; keys
// the record/replay store.
std::string prompt_hash(const GenerationRequest& request);

class Backend {
 public:
  virtual ~Backend() = default;
  virtual GenerationResponse generate(const GenerationRequest& request) = 0;
  virtual std::string id() const = 0;
};

class ScriptedBackend : public Backend {
 public:
  using Handler = std::function<std::string(const GenerationRequest&)>;
  ScriptedBackend(std::string name, Handler handler)
      : name_(std::move(name)), handler_(std::move(handler)) {}
  GenerationResponse generate(const GenerationRequest& request) override;
  std::string id() const override { return "scripted:" + name_; }

 private:
  std::string name_;
  Handler handler_;
};

// OpenAI-style chat-completions endpoint. Endpoint, key and model come from
// the environment unless set explicitly:
//   GRIDMIND_ENDPOINT  e.g. https://api.example.com/v1
//   GRIDMIND_API_KEY
//   GRIDMIND_MODEL
struct RemoteConfig {
  std::string base_url;
  std::string api_key;
  std::string model;
  int max_attempts = 3;
  double backoff_initial_seconds = 0.5;
  int connect_timeout_seconds = 10;
  int read_timeout_seconds = 600;
};

RemoteConfig remote_config_from_env();

class RemoteBackend : public Backend {
 public:
  explicit RemoteBackend(RemoteConfig config);
  GenerationResponse generate(const GenerationRequest& request) override;
  std::string id() const override { return "remote:" + config_.model; }
  int attempts_made() const { return attempts_made_.load(); }

 private:
  RemoteConfig config_;
  std::atomic<int> attempts_made_{0};
};

// Content-addressed directory of JSON files, one per request hash.
// Reads are lock-free; writes are serialized.
class ReplayStore {
 public:
  explicit ReplayStore(std::filesystem::path dir, bool create = false);
  bool contains(const std::string& hash) const;
  std::optional<GenerationResponse> load(const std::string& hash) const;
  void save(const std::string& hash, const GenerationRequest& request,
            const GenerationResponse& response);
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::mutex write_mutex_;
};

class RecordBackend : public Backend {
 public:
  RecordBackend(std::shared_ptr<Backend> inner, std::shared_ptr<ReplayStore> store)
      : inner_(std::move(inner)), store_(std::move(store)) {}
  GenerationResponse generate(const GenerationRequest& request) override;
  std::string id() const override { return "record(" + inner_->id() + ")"; }

 private:
  std::shared_ptr<Backend> inner_;
  std::shared_ptr<ReplayStore> store_;
};

class ReplayBackend : public Backend {
 public:
  explicit ReplayBackend(std::shared_ptr<ReplayStore> store) : store_(std::move(store)) {}
  GenerationResponse generate(const GenerationRequest& request) override;
  std::string id() const override { return "replay"; }

 private:
  std::shared_ptr<ReplayStore> store_;
};

struct GatewayOptions {
  int max_concurrent_requests = 4;
  std::optional<long> token_budget;  // budget_exceeded once crossed
};

// Front door for all generation calls: bounds in-flight concurrency and
// enforces the optional per-run token budget. Token usage falls back to a
// chars/4 estimate when the backend reports no counts.
class Gateway {
 public:
  Gateway(std::shared_ptr<Backend> backend, GatewayOptions options = {});
  GenerationResponse generate(const GenerationRequest& request);
  long tokens_used() const { return tokens_used_.load(); }
  const std::string backend_id() const { return backend_->id(); }

 private:
  std::shared_ptr<Backend> backend_;
  GatewayOptions options_;
  std::atomic<long> tokens_used_{0};
  std::mutex slot_mutex_;
  std::condition_variable slot_cv_;
  int in_flight_ = 0;
};

// One line per gateway call, attributed by the caller to (episode, step).
struct RequestLogEntry {
  int episode = 0;
  int step = 0;
  RequestTag tag = RequestTag::value;
  std::string hash;
  bool cache_hit = false;
};

}  // namespace gridmind
