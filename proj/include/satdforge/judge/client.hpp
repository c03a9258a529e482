#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace satdforge::judge {

struct ChatRequest {
  std::string model;
  std::string prompt;
  double temperature = 0.0;
  int max_output_tokens = 2048;
};

struct ClientConfig {
  std::string endpoint_url;  // e.g. http://localhost:8000/v1
  std::string model;
  int max_concurrency = 4;
  int retry_limit = 5;
  int backoff_initial_ms = 500;
  std::string api_key;                // usually from SATD_FORGE_API_KEY
  std::filesystem::path cache_dir;    // empty disables the disk cache
};

struct EndpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AuthError : EndpointError {
  using EndpointError::EndpointError;
};
struct BadRequest : EndpointError {
  using EndpointError::EndpointError;
};
struct ExhaustedRetries : EndpointError {
  using EndpointError::EndpointError;
};

// Chat-completion client with disk caching and retrying transport. Transient
// failures (429, 5xx, network) back off exponentially up to retry_limit;
// credential rejections surface immediately as AuthError.
class ChatClient {
 public:
  explicit ChatClient(ClientConfig config);

  const ClientConfig& config() const { return config_; }

  // Cached: two calls with the same request perform at most one round trip.
  std::string complete(const ChatRequest& request);

  struct Outcome {
    std::optional<std::string> text;
    std::string error;  // set when text is absent
  };

  // Bounded pool of in-flight requests; results re-associated by index.
  std::vector<Outcome> complete_many(const std::vector<ChatRequest>& requests);

  static std::string cache_key(const ChatRequest& request);

 private:
  std::optional<std::string> cache_get(const std::string& key);
  void cache_put(const std::string& key, const std::string& text);
  std::string post_once(const ChatRequest& request);

  ClientConfig config_;
  std::string host_;       // scheme://host[:port]
  std::string path_prefix_;
  std::mutex cache_mutex_;
};

}  // namespace satdforge::judge
