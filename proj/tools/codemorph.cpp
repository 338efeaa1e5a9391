// codemorph: mutate -> repair -> evaluate -> report pipeline for testing
// the robustness of LLM-backed program repair against semantics-preserving
// Java perturbations.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "codemorph/config.hpp"
#include "codemorph/dataset.hpp"
#include "codemorph/errors.hpp"
#include "codemorph/harness.hpp"
#include "codemorph/hash.hpp"
#include "codemorph/metrics.hpp"
#include "codemorph/mutant.hpp"
#include "codemorph/report.hpp"
#include "codemorph/rng.hpp"
#include "codemorph/store.hpp"

namespace {

using namespace codemorph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitCampaignHealth = 4;

struct CliOverrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string pd_range;
  std::optional<int> cap;
  std::string mrs;
  std::string out;
  std::string mock_fixture;
  std::string campaign;
  std::string model_name;
  bool keep_going = false;
  bool export_pairs_flag = false;
  bool errors_as_invalid = false;
};

CampaignConfig resolve_config(const CliOverrides& cli) {
  CampaignConfig cfg;
  if (!cli.config_path.empty()) cfg = load_config(cli.config_path);
  if (cli.seed) cfg.seed = cli.seed;
  if (!cli.pd_range.empty())
    std::tie(cfg.pd_min, cfg.pd_max) = parse_pd_range(cli.pd_range);
  if (cli.cap) cfg.cap = *cli.cap;
  if (!cli.mrs.empty()) cfg.mr_subset = parse_mr_list(cli.mrs);
  if (!cli.out.empty()) cfg.out_root = cli.out;
  if (!cli.campaign.empty()) cfg.campaign = cli.campaign;
  if (!cli.model_name.empty()) cfg.model.model_name = cli.model_name;
  if (cli.keep_going) cfg.keep_going = true;
  if (!cfg.seed) {
    throw ConfigError("a seed is required (--seed or \"seed\" in the config); "
                      "campaigns are never seeded from the clock");
  }
  if (cfg.pd_min < 1 || cfg.pd_max > 9 || cfg.pd_min > cfg.pd_max) {
    throw ConfigError("pd range must lie within 1..9");
  }
  return cfg;
}

std::vector<BaseSample> load_all_samples(const CampaignConfig& cfg) {
  if (cfg.dataset_roots.empty()) {
    throw ConfigError("no dataset_roots configured");
  }
  std::vector<BaseSample> all;
  for (const auto& root : cfg.dataset_roots) {
    std::vector<BaseSample> part = load_samples(root);
    for (BaseSample& s : part) {
      for (const BaseSample& existing : all) {
        if (existing.id == s.id) {
          throw ConfigError("duplicate sample id across datasets: " + s.id);
        }
      }
      all.push_back(std::move(s));
    }
  }
  if (all.empty()) throw ConfigError("datasets contain no samples");
  return all;
}

std::uint64_t sample_seed(const CampaignConfig& cfg, const std::string& sample_id) {
  return mix_seed(*cfg.seed, fnv1a64(sample_id));
}

std::filesystem::path lists_path(const CampaignConfig& cfg) {
  return cfg.out_root / "lists.json";
}

// ---------------------------------------------------------------------------

int cmd_detect(const CampaignConfig& cfg) {
  std::vector<BaseSample> samples = load_all_samples(cfg);
  json lists = json::object();
  std::vector<std::string> failures;
  for (const BaseSample& s : samples) {
    try {
      PerturbationList list = detect_applicable(s, sample_seed(cfg, s.id));
      json mrs = json::array();
      for (MrId id : list.applicable) mrs.push_back(mr_code(id));
      lists[s.id] = mrs;
    } catch (const ParseFatal& e) {
      failures.push_back(s.id + ": " + e.what());
    }
  }
  std::filesystem::create_directories(cfg.out_root);
  std::ofstream out(lists_path(cfg));
  out << lists.dump(2) << "\n";
  if (!out) throw IoError("cannot write " + lists_path(cfg).string());

  std::cout << "detected applicable MRs for " << lists.size() << "/"
            << samples.size() << " samples -> " << lists_path(cfg).string()
            << "\n";
  for (const std::string& f : failures) std::cerr << "parse failure: " << f << "\n";
  return failures.empty() ? kExitOk : kExitData;
}

std::map<std::string, std::vector<MrId>> read_lists(const CampaignConfig& cfg) {
  std::map<std::string, std::vector<MrId>> out;
  std::ifstream in(lists_path(cfg));
  if (!in) return out;
  json j;
  in >> j;
  for (auto& [id, mrs] : j.items()) {
    std::vector<MrId> list;
    for (const json& m : mrs) {
      auto mr = mr_from_code(m.get<std::string>());
      if (mr) list.push_back(*mr);
    }
    out[id] = std::move(list);
  }
  return out;
}

int cmd_mutate(const CampaignConfig& cfg) {
  std::vector<BaseSample> samples = load_all_samples(cfg);
  std::map<std::string, std::vector<MrId>> lists = read_lists(cfg);

  MutantStore store(cfg.out_root / "mutants");
  std::map<int, long> per_pd;
  long degenerate = 0;
  std::vector<std::string> failures;

  std::vector<MrId> enabled = cfg.effective_mrs();
  for (const BaseSample& s : samples) {
    try {
      std::vector<MrId> applicable;
      auto it = lists.find(s.id);
      if (it != lists.end()) {
        applicable = it->second;
      } else {
        applicable = detect_applicable(s, sample_seed(cfg, s.id)).applicable;
      }
      // honor the configured MR subset
      std::vector<MrId> usable;
      for (MrId id : applicable) {
        if (std::find(enabled.begin(), enabled.end(), id) != enabled.end()) {
          usable.push_back(id);
        }
      }
      if (usable.empty()) continue;
      PerturbationList list{s.id, usable};
      int l = static_cast<int>(usable.size());
      for (int pd = cfg.pd_min; pd <= std::min(cfg.pd_max, l); ++pd) {
        for (const ComboSpec& combo :
             enumerate_combos(list, pd, cfg.cap, *cfg.seed)) {
          std::uint64_t seed =
              mix_seed(*cfg.seed, fnv1a64(s.id + ":" + combo.code()));
          Mutant m = generate_mutant(s, combo, seed);
          store.write(m);
          if (m.degenerate) ++degenerate;
          else ++per_pd[m.pd];
        }
      }
    } catch (const std::exception& e) {
      failures.push_back(s.id + ": " + e.what());
      if (!cfg.keep_going) {
        std::cerr << "generation failed for " << s.id << ": " << e.what() << "\n";
        return kExitData;
      }
    }
  }

  long total = 0;
  for (const auto& [pd, count] : per_pd) {
    std::cout << "pd=" << pd << ": " << count << " mutants\n";
    total += count;
  }
  std::cout << "total: " << total << " mutants";
  if (degenerate > 0) std::cout << " (+" << degenerate << " degenerate, flagged)";
  std::cout << " -> " << store.root().string() << "\n";
  for (const std::string& f : failures) std::cerr << "failed: " << f << "\n";
  return failures.empty() ? kExitOk : kExitData;
}

int cmd_repair(const CampaignConfig& cfg, const CliOverrides& cli) {
  std::vector<BaseSample> samples = load_all_samples(cfg);
  MutantStore store(cfg.out_root / "mutants");
  std::vector<Mutant> mutants = store.load_all();
  if (mutants.empty()) {
    throw ConfigError("mutant store is empty; run `codemorph mutate` first");
  }

  std::vector<std::pair<Mutant, BaseSample>> work;
  for (Mutant& m : mutants) {
    if (m.degenerate) continue;  // flagged out of campaigns
    auto sample = find_sample(samples, m.base_id);
    if (!sample) {
      std::cerr << "no sample for mutant " << m.id << "; skipping\n";
      continue;
    }
    work.emplace_back(std::move(m), std::move(*sample));
  }

  std::unique_ptr<ModelClient> client;
  if (!cli.mock_fixture.empty()) {
    client = make_mock_client(cli.mock_fixture);
  } else {
    if (cfg.model.base_url.empty()) {
      throw ConfigError("model.base_url missing (or use --mock <fixture.json>)");
    }
    client = make_http_client(cfg.model);
  }

  OracleConfig oracle;
  oracle.timeout_s = cfg.oracle_timeout_s;

  CampaignOptions options;
  options.campaign = cfg.campaign;
  options.model_name =
      cfg.model.model_name.empty() ? "mock" : cfg.model.model_name;
  options.prompt_template = cfg.prompt_template;
  options.max_concurrency = cfg.model.max_concurrency;
  options.oracle_parallelism = cfg.oracle_parallelism;
  options.out_root = cfg.out_root;

  CampaignStats stats = run_campaign(work, *client, oracle, options);
  std::cout << "attempted=" << stats.attempted << " valid=" << stats.valid
            << " invalid=" << stats.invalid << " errors=" << stats.errors
            << " resumed-skips=" << stats.skipped << "\n";

  if (stats.attempted > 0) {
    double error_fraction =
        static_cast<double>(stats.errors) / static_cast<double>(stats.attempted);
    if (error_fraction > cfg.max_error_fraction) {
      std::cerr << "error fraction " << error_fraction << " exceeds threshold "
                << cfg.max_error_fraction << "\n";
      return kExitCampaignHealth;
    }
  }
  return kExitOk;
}

int do_export_pairs(const CampaignConfig& cfg) {
  std::vector<BaseSample> samples = load_all_samples(cfg);
  MutantStore store(cfg.out_root / "mutants");
  std::filesystem::path out_path = cfg.out_root / "pairs.jsonl";
  long count = export_pairs(
      store,
      [&](const std::string& base_id) -> std::optional<std::string> {
        auto s = find_sample(samples, base_id);
        if (!s) return std::nullopt;
        return s->source;
      },
      out_path);
  std::cout << count << " training pairs -> " << out_path.string() << "\n";
  return kExitOk;
}

int cmd_report(const CampaignConfig& cfg, const CliOverrides& cli) {
  std::vector<AttemptRecord> records = read_all_runs(cfg.out_root / "runs");
  if (records.empty()) {
    std::cerr << "no attempt records under "
              << (cfg.out_root / "runs").string() << "\n";
    return kExitConfig;
  }

  // Mutant/base texts for per-group edit distances, when both are present.
  MutantStore store(cfg.out_root / "mutants");
  std::map<std::string, std::pair<std::string, std::string>> texts;
  if (std::filesystem::exists(store.root()) && !cfg.dataset_roots.empty()) {
    std::vector<BaseSample> samples;
    try {
      samples = load_all_samples(cfg);
    } catch (const ConfigError&) {
      samples.clear();
    }
    for (const Mutant& m : store.load_all()) {
      auto s = find_sample(samples, m.base_id);
      if (s) texts[m.id] = {s->source, m.text};
    }
  }

  GroupOptions options;
  options.errors_as_invalid = cli.errors_as_invalid;
  if (!texts.empty()) {
    options.texts_for = [texts](const std::string& id)
        -> std::optional<std::pair<std::string, std::string>> {
      auto it = texts.find(id);
      if (it == texts.end()) return std::nullopt;
      return it->second;
    };
  }

  std::filesystem::path report_dir = cfg.out_root / "reports";
  render_report(records, options, report_dir);
  std::cout << summaries_to_markdown(
                   group_metrics(records, GroupKey::kModel, options), "Model")
            << "\nreports -> " << report_dir.string() << "\n";

  if (cli.export_pairs_flag) return do_export_pairs(cfg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metamorphic robustness testing for LLM-based Java repair"};
  app.require_subcommand(1);

  CliOverrides cli;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", cli.config_path, "campaign config JSON");
    sub->add_option("--seed", cli.seed, "campaign seed (u64, mandatory)");
    sub->add_option("--out", cli.out, "output root directory");
    sub->add_option("--mrs", cli.mrs, "MR subset, e.g. m1,m3,m9");
    sub->add_option("--pd", cli.pd_range, "perturbation distance range a..b");
    sub->add_option("--cap", cli.cap, "max combos per (sample, pd)");
  };

  CLI::App* detect = app.add_subcommand("detect", "write lists.json of applicable MRs");
  add_common(detect);

  CLI::App* mutate = app.add_subcommand("mutate", "populate the mutant store");
  add_common(mutate);
  mutate->add_flag("--keep-going", cli.keep_going,
                   "continue past per-sample generation failures");

  CLI::App* repair = app.add_subcommand("repair", "drive the model over all mutants");
  add_common(repair);
  repair->add_option("--mock", cli.mock_fixture,
                     "scripted mock endpoint fixture (JSON)");
  repair->add_option("--campaign", cli.campaign, "campaign name");
  repair->add_option("--model-name", cli.model_name, "model name for records");

  CLI::App* report = app.add_subcommand("report", "aggregate records into tables");
  add_common(report);
  report->add_flag("--export-pairs", cli.export_pairs_flag,
                   "also export readability training pairs");
  report->add_flag("--errors-as-invalid", cli.errors_as_invalid,
                   "count error verdicts as invalid in R-scores");

  CLI::App* pairs = app.add_subcommand("export-pairs",
                                       "export readability training pairs");
  add_common(pairs);

  CLI11_PARSE(app, argc, argv);

  try {
    CampaignConfig cfg = resolve_config(cli);
    if (detect->parsed()) return cmd_detect(cfg);
    if (mutate->parsed()) return cmd_mutate(cfg);
    if (repair->parsed()) return cmd_repair(cfg, cli);
    if (report->parsed()) return cmd_report(cfg, cli);
    if (pairs->parsed()) return do_export_pairs(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
