#include "codemorph/config.hpp"

#include <fstream>

#include <json.hpp>

#include "codemorph/errors.hpp"

namespace codemorph {

using nlohmann::json;

CampaignConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("malformed config: " + std::string(e.what()));
  }

  CampaignConfig cfg;
  cfg.campaign = j.value("campaign", cfg.campaign);
  if (j.contains("dataset_roots")) {
    for (const json& r : j["dataset_roots"]) {
      cfg.dataset_roots.emplace_back(r.get<std::string>());
    }
  } else if (j.contains("dataset_root")) {
    cfg.dataset_roots.emplace_back(j["dataset_root"].get<std::string>());
  }
  if (j.contains("mr_subset")) {
    for (const json& m : j["mr_subset"]) {
      auto id = mr_from_code(m.get<std::string>());
      if (!id) throw ConfigError("unknown MR " + m.get<std::string>());
      cfg.mr_subset.push_back(*id);
    }
  }
  if (j.contains("pd_range")) {
    const json& r = j["pd_range"];
    if (r.is_array() && r.size() == 2) {
      cfg.pd_min = r[0].get<int>();
      cfg.pd_max = r[1].get<int>();
    } else if (r.is_string()) {
      std::tie(cfg.pd_min, cfg.pd_max) = parse_pd_range(r.get<std::string>());
    } else {
      throw ConfigError("pd_range must be [a,b] or \"a..b\"");
    }
  }
  cfg.cap = j.value("cap", cfg.cap);
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("out")) cfg.out_root = j["out"].get<std::string>();

  if (j.contains("model")) {
    const json& m = j["model"];
    cfg.model.base_url = m.value("base_url", "");
    cfg.model.model_name = m.value("name", m.value("model_name", ""));
    cfg.model.max_tokens = m.value("max_tokens", cfg.model.max_tokens);
    cfg.model.auth_env = m.value("auth_env", "");
    cfg.model.request_timeout_s =
        m.value("request_timeout_s", cfg.model.request_timeout_s);
    cfg.model.max_concurrency =
        m.value("max_concurrency", cfg.model.max_concurrency);
    if (m.contains("temperature") && m["temperature"].get<double>() != 0.0) {
      throw ConfigError("temperature is pinned to 0 for deterministic runs");
    }
  }
  if (j.contains("oracle")) {
    const json& o = j["oracle"];
    cfg.oracle_timeout_s = o.value("timeout_s", cfg.oracle_timeout_s);
    cfg.oracle_parallelism = o.value("max_parallel", cfg.oracle_parallelism);
  }
  cfg.prompt_template = j.value("prompt_template", "");
  cfg.max_error_fraction = j.value("max_error_fraction", cfg.max_error_fraction);

  if (cfg.pd_min < 1 || cfg.pd_max > 9 || cfg.pd_min > cfg.pd_max) {
    throw ConfigError("pd_range must lie within 1..9");
  }
  if (cfg.cap < 1) throw ConfigError("cap must be >= 1");
  if (cfg.model.max_concurrency < 1)
    throw ConfigError("max_concurrency must be >= 1");
  return cfg;
}

std::pair<int, int> parse_pd_range(const std::string& text) {
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int k = std::stoi(text);
      return {k, k};
    }
    int a = std::stoi(text.substr(0, dots));
    int b = std::stoi(text.substr(dots + 2));
    return {a, b};
  } catch (const std::exception&) {
    throw ConfigError("cannot parse pd range '" + text + "'");
  }
}

std::vector<MrId> parse_mr_list(const std::string& text) {
  std::vector<MrId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) {
      auto id = mr_from_code(item);
      if (!id) throw ConfigError("unknown MR '" + item + "'");
      out.push_back(*id);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace codemorph
