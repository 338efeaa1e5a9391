#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>
#include <unordered_map>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

#include "codemorph/errors.hpp"
#include "codemorph/harness.hpp"
#include "codemorph/hash.hpp"

namespace codemorph {

using nlohmann::json;

std::string prompt_hash_key(const std::string& prompt) {
  return hex64(fnv1a64(prompt));
}

namespace {

struct ParsedUrl {
  bool https = false;
  std::string host;
  int port = 80;
  std::string path;  // prefix, no trailing slash
};

ParsedUrl parse_url(const std::string& url) {
  ParsedUrl out;
  std::string rest = url;
  if (rest.rfind("https://", 0) == 0) {
    out.https = true;
    out.port = 443;
    rest = rest.substr(8);
  } else if (rest.rfind("http://", 0) == 0) {
    rest = rest.substr(7);
  } else {
    throw TransportError("unsupported URL scheme: " + url);
  }
  std::size_t slash = rest.find('/');
  std::string hostport = slash == std::string::npos ? rest : rest.substr(0, slash);
  out.path = slash == std::string::npos ? "" : rest.substr(slash);
  std::size_t colon = hostport.find(':');
  if (colon == std::string::npos) {
    out.host = hostport;
  } else {
    out.host = hostport.substr(0, colon);
    out.port = std::stoi(hostport.substr(colon + 1));
  }
  while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
  return out;
}

class HttpModelClient : public ModelClient {
 public:
  explicit HttpModelClient(ModelEndpointConfig config) : config_(std::move(config)) {}

  std::string complete(const std::string& prompt) override {
    json body{{"model", config_.model_name},
              {"messages", json::array({json{{"role", "user"}, {"content", prompt}}})},
              {"temperature", config_.temperature},
              {"max_tokens", config_.max_tokens}};
    const std::string payload = body.dump();

    ParsedUrl url = parse_url(config_.base_url);
    std::string endpoint = url.path;
    if (endpoint.find("/chat/completions") == std::string::npos) {
      endpoint += "/chat/completions";
    }

    httplib::Headers headers;
    if (!config_.auth_env.empty()) {
      const char* key = std::getenv(config_.auth_env.c_str());
      if (key && *key) {
        headers.emplace("Authorization", std::string("Bearer ") + key);
      }
    }

    constexpr int kAttempts = 3;
    std::string last_error;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(
            std::chrono::milliseconds(100LL << (attempt - 1)));
      }
      httplib::Result res = post(url, endpoint, headers, payload);
      if (!res) {
        last_error = "transport: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status == 401 || res->status == 403) {
        throw AuthError("endpoint rejected credentials (HTTP " +
                        std::to_string(res->status) + ")");
      }
      if (res->status >= 500 || res->status == 429) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200) {
        throw TransportError("HTTP " + std::to_string(res->status) + ": " +
                             res->body.substr(0, 200));
      }
      return first_choice(res->body);
    }
    throw TransportError("model request failed after " +
                         std::to_string(kAttempts) + " attempts: " + last_error);
  }

 private:
  httplib::Result post(const ParsedUrl& url, const std::string& endpoint,
                       const httplib::Headers& headers, const std::string& payload) {
    if (url.https) {
      httplib::SSLClient cli(url.host, url.port);
      cli.set_read_timeout(std::chrono::duration<double>(config_.request_timeout_s));
      cli.set_connection_timeout(std::chrono::duration<double>(10.0));
      return cli.Post(endpoint, headers, payload, "application/json");
    }
    httplib::Client cli(url.host, url.port);
    cli.set_read_timeout(std::chrono::duration<double>(config_.request_timeout_s));
    cli.set_connection_timeout(std::chrono::duration<double>(10.0));
    return cli.Post(endpoint, headers, payload, "application/json");
  }

  static std::string first_choice(const std::string& body) {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::exception& e) {
      throw TransportError(std::string("malformed response JSON: ") + e.what());
    }
    if (!j.contains("choices") || !j["choices"].is_array() || j["choices"].empty()) {
      throw TransportError("response has no choices");
    }
    const json& choice = j["choices"][0];
    if (choice.contains("message") && choice["message"].contains("content")) {
      return choice["message"]["content"].get<std::string>();
    }
    if (choice.contains("text")) return choice["text"].get<std::string>();
    throw TransportError("response choice has no content");
  }

  ModelEndpointConfig config_;
};

class MockModelClient : public ModelClient {
 public:
  explicit MockModelClient(json fixture) {
    if (!fixture.is_object()) {
      throw ConfigError("mock fixture must be a JSON object");
    }
    for (auto& [key, value] : fixture.items()) {
      responses_[key] = value.get<std::string>();
    }
  }

  std::string complete(const std::string& prompt) override {
    auto it = responses_.find(prompt_hash_key(prompt));
    if (it != responses_.end()) return it->second;
    it = responses_.find("default");
    if (it != responses_.end()) return it->second;
    throw TransportError("mock fixture has no response for prompt hash " +
                         prompt_hash_key(prompt));
  }

 private:
  std::unordered_map<std::string, std::string> responses_;
};

}  // namespace

std::unique_ptr<ModelClient> make_http_client(const ModelEndpointConfig& config) {
  return std::make_unique<HttpModelClient>(config);
}

std::unique_ptr<ModelClient> make_mock_client(const std::filesystem::path& fixture) {
  std::ifstream in(fixture);
  if (!in) throw ConfigError("cannot read mock fixture " + fixture.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("malformed mock fixture: " + std::string(e.what()));
  }
  return std::make_unique<MockModelClient>(std::move(j));
}

std::unique_ptr<ModelClient> make_mock_client_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError("malformed mock fixture: " + std::string(e.what()));
  }
  return std::make_unique<MockModelClient>(std::move(j));
}

}  // namespace codemorph
