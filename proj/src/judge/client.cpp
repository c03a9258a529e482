#include "satdforge/judge/client.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "satdforge/util/fsio.hpp"
#include "satdforge/util/log.hpp"
#include "satdforge/util/sha256.hpp"

namespace satdforge::judge {

namespace {

constexpr std::string_view kCompletionsPath = "/chat/completions";

// Splits "http://host:8000/v1" into the client base and the path prefix.
std::pair<std::string, std::string> split_endpoint(const std::string& url) {
  std::size_t scheme = url.find("://");
  std::size_t path_start =
      scheme == std::string::npos ? url.find('/') : url.find('/', scheme + 3);
  if (path_start == std::string::npos) return {url, ""};
  std::string prefix = url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {url.substr(0, path_start), prefix};
}

}  // namespace

ChatClient::ChatClient(ClientConfig config) : config_(std::move(config)) {
  std::tie(host_, path_prefix_) = split_endpoint(config_.endpoint_url);
  if (path_prefix_.size() >= kCompletionsPath.size() &&
      path_prefix_.compare(path_prefix_.size() - kCompletionsPath.size(),
                           kCompletionsPath.size(), kCompletionsPath) == 0)
    path_prefix_.resize(path_prefix_.size() - kCompletionsPath.size());
}

std::string ChatClient::cache_key(const ChatRequest& request) {
  char temp[32];
  std::snprintf(temp, sizeof temp, "%.6g", request.temperature);
  std::string material = request.model;
  material += '\x1f';
  material += request.prompt;
  material += '\x1f';
  material += temp;
  material += '\x1f';
  material += std::to_string(request.max_output_tokens);
  return util::sha256_hex(material);
}

std::optional<std::string> ChatClient::cache_get(const std::string& key) {
  if (config_.cache_dir.empty()) return std::nullopt;
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return util::read_file(config_.cache_dir / (key + ".txt"));
}

void ChatClient::cache_put(const std::string& key, const std::string& text) {
  if (config_.cache_dir.empty()) return;
  std::lock_guard<std::mutex> lock(cache_mutex_);
  util::write_file_atomic(config_.cache_dir / (key + ".txt"), text);
}

std::string ChatClient::post_once(const ChatRequest& request) {
  nlohmann::json body = {
      {"model", request.model},
      {"messages",
       nlohmann::json::array(
           {{{"role", "user"}, {"content", request.prompt}}})},
      {"temperature", request.temperature},
      {"max_tokens", request.max_output_tokens},
  };

  httplib::Client client(host_);
  client.set_connection_timeout(30);
  client.set_read_timeout(600);
  httplib::Headers headers;
  if (!config_.api_key.empty())
    headers.emplace("Authorization", "Bearer " + config_.api_key);

  httplib::Result res = client.Post(path_prefix_ + std::string(kCompletionsPath),
                                    headers, body.dump(), "application/json");
  if (!res)
    throw EndpointError("transport failure: " + httplib::to_string(res.error()));
  if (res->status == 401 || res->status == 403)
    throw AuthError("endpoint rejected credentials (HTTP " +
                    std::to_string(res->status) + ")");
  if (res->status == 429)
    throw EndpointError("rate limited (HTTP 429)");
  if (res->status >= 500)
    throw EndpointError("server error (HTTP " + std::to_string(res->status) + ")");
  if (res->status != 200)
    throw BadRequest("unexpected HTTP " + std::to_string(res->status) + ": " +
                     res->body);

  try {
    nlohmann::json reply = nlohmann::json::parse(res->body);
    return reply.at("choices").at(0).at("message").at("content")
        .get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw EndpointError(std::string("malformed completion response: ") +
                        e.what());
  }
}

std::string ChatClient::complete(const ChatRequest& request) {
  std::string key = cache_key(request);
  if (auto cached = cache_get(key)) return *cached;

  int attempts = config_.retry_limit < 1 ? 1 : config_.retry_limit;
  std::string last_error;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      auto delay = std::chrono::milliseconds(
          static_cast<long long>(config_.backoff_initial_ms) << (attempt - 1));
      std::this_thread::sleep_for(delay);
    }
    try {
      std::string text = post_once(request);
      cache_put(key, text);
      return text;
    } catch (const AuthError&) {
      throw;
    } catch (const BadRequest&) {
      throw;
    } catch (const EndpointError& e) {
      last_error = e.what();
      util::log_warn("request attempt " + std::to_string(attempt + 1) +
                     " failed: " + last_error);
    }
  }
  throw ExhaustedRetries("gave up after " + std::to_string(attempts) +
                         " attempts: " + last_error);
}

std::vector<ChatClient::Outcome> ChatClient::complete_many(
    const std::vector<ChatRequest>& requests) {
  std::vector<Outcome> outcomes(requests.size());
  if (requests.empty()) return outcomes;

  unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(std::max(config_.max_concurrency, 1),
                            requests.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= requests.size()) return;
      try {
        outcomes[i].text = complete(requests[i]);
      } catch (const EndpointError& e) {
        outcomes[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return outcomes;
}

}  // namespace satdforge::judge
