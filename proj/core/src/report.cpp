#include "codemorph/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "codemorph/edits.hpp"
#include "codemorph/errors.hpp"

namespace codemorph {

namespace {

std::string fmt3(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

std::string fmt2(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("short write to " + path.string());
}

}  // namespace

std::string summaries_to_markdown(const std::vector<MetricsSummary>& summaries,
                                  std::string_view key_header) {
  std::string md;
  md += "| " + std::string(key_header) +
        " | Invalid | Valid | R-score | Avg. Edit Distance |\n";
  md += "| --- | --- | --- | --- | --- |\n";
  for (const MetricsSummary& s : summaries) {
    md += "| " + s.scope_key + " | " + std::to_string(s.invalid) + " | " +
          std::to_string(s.valid) + " | " +
          (s.r_score ? fmt3(*s.r_score) : std::string("-")) + " | " +
          (s.avg_edit_distance ? fmt2(*s.avg_edit_distance) : std::string("-")) +
          " |\n";
  }
  return md;
}

std::string summaries_to_csv(const std::vector<MetricsSummary>& summaries) {
  std::string csv = "scope_key,valid,invalid,r_score,avg_edit_distance\n";
  for (const MetricsSummary& s : summaries) {
    csv += s.scope_key + "," + std::to_string(s.valid) + "," +
           std::to_string(s.invalid) + ",";
    if (s.r_score) csv += fmt3(*s.r_score) ;
    csv += ",";
    if (s.avg_edit_distance) csv += fmt2(*s.avg_edit_distance);
    csv += "\n";
  }
  return csv;
}

void render_report(const std::vector<AttemptRecord>& records,
                   const GroupOptions& options,
                   const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string());

  struct Table {
    GroupKey key;
    std::string_view header;
  };
  constexpr Table kTables[] = {
      {GroupKey::kOverall, "Scope"},
      {GroupKey::kModel, "Model"},
      {GroupKey::kMrId, "Perturbation Rule"},
      {GroupKey::kPd, "pd"},
      {GroupKey::kRepairPattern, "Repair Pattern"},
  };
  for (const Table& t : kTables) {
    std::vector<MetricsSummary> summaries = group_metrics(records, t.key, options);
    std::string base = "report_" + std::string(group_key_name(t.key));
    write_text(out_dir / (base + ".md"),
               summaries_to_markdown(summaries, t.header));
    write_text(out_dir / (base + ".csv"), summaries_to_csv(summaries));
    if (t.key == GroupKey::kPd) {
      std::string series = "pd,r_score\n";
      for (const MetricsSummary& s : summaries) {
        if (s.r_score) series += s.scope_key + "," + fmt3(*s.r_score) + "\n";
      }
      write_text(out_dir / "pd_series.csv", series);
    }
  }
}

long export_pairs(
    const MutantStore& store,
    const std::function<std::optional<std::string>(const std::string& base_id)>&
        base_source,
    const std::filesystem::path& out_path) {
  std::error_code ec;
  std::filesystem::create_directories(out_path.parent_path(), ec);
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + out_path.string());

  long count = 0;
  for (const Mutant& m : store.load_all()) {
    if (m.degenerate) continue;
    std::optional<std::string> original = base_source(m.base_id);
    if (!original) continue;
    if (!text_differs(m.text, *original)) continue;
    nlohmann::json j{{"x", m.text},
                     {"x_prime", *original},
                     {"base_id", m.base_id},
                     {"combo", m.combo.code()}};
    out << j.dump() << "\n";
    ++count;
  }
  if (!out) throw IoError("short write to " + out_path.string());
  return count;
}

}  // namespace codemorph
