#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <fmt/format.h>
#include "json.hpp"

#include "lvqueens/harness.hpp"
#include "lvqueens/version.hpp"

namespace lvq {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kRawHeader = "n,trial,seed,attempts,restarts,duration_ns,status";
constexpr std::string_view kSolutionsHeader = "trial,solution_hash,columns";
constexpr std::string_view kHistHeader = "bin_lo,bin_hi,count";
constexpr std::string_view kSummaryHeader =
    "n,mean,median,mode,skew,kurtosis,lower,upper,distribution,back_attempts,speedup";

bool is_result_file(const fs::path& p) {
  const std::string name = p.filename().string();
  if (name == "manifest.json" || name == "summary.csv" || name == "summary.json") return true;
  for (std::string_view prefix : {"raw_n", "hist_n", "solutions_n"}) {
    if (name.starts_with(prefix) && name.ends_with(".csv")) return true;
  }
  return false;
}

// Collects paths written so far so a failure can still leave a manifest.
class Writer {
 public:
  explicit Writer(fs::path dir) : dir_(std::move(dir)) {}

  void write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open {} for writing", path.string()));
    out << content;
    out.flush();
    if (!out) throw IoError(fmt::format("failed writing {}", path.string()));
    written_.push_back(name);
  }

  const std::vector<std::string>& written() const noexcept { return written_; }

 private:
  fs::path dir_;
  std::vector<std::string> written_;
};

std::string raw_csv(const SizeCampaign& c) {
  std::string out(kRawHeader);
  out += '\n';
  for (const TrialRecord& t : c.trials) {
    out += fmt::format("{},{},{},{},{},{},{}\n", t.n, t.trial, t.seed, t.attempts, t.restarts,
                       t.duration_ns, status_name(t.status));
  }
  return out;
}

std::string join_columns(const std::vector<int>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(columns[i]);
  }
  return out;
}

std::string solutions_csv(const SizeCampaign& c) {
  std::string out(kSolutionsHeader);
  out += '\n';
  for (const TrialRecord& t : c.trials) {
    if (t.status != TrialStatus::ok) continue;
    const std::uint64_t hash = Solution::from_columns(t.columns).hash();
    out += fmt::format("{},{:016x},{}\n", t.trial, hash, join_columns(t.columns));
  }
  return out;
}

std::string hist_csv(const Histogram& h) {
  std::string out(kHistHeader);
  out += '\n';
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out += fmt::format("{},{},{}\n", format_decimal(h.bin_edges[i]), format_decimal(h.bin_edges[i + 1]),
                       h.counts[i]);
  }
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out(kSummaryHeader);
  out += '\n';
  for (const SummaryRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", r.n, format_decimal(r.mean),
                       format_decimal(r.median), format_decimal(r.mode), format_decimal(r.skew),
                       format_decimal(r.kurtosis), format_decimal(r.lower), format_decimal(r.upper),
                       r.distribution, r.back_attempts ? std::to_string(*r.back_attempts) : "",
                       r.speedup ? format_decimal(*r.speedup) : "");
  }
  return out;
}

ordered_json summary_json(const std::vector<SummaryRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const SummaryRow& r : rows) {
    ordered_json j;
    j["n"] = r.n;
    j["mean"] = r.mean;
    j["median"] = r.median;
    j["mode"] = r.mode;
    j["skew"] = r.skew;
    j["kurtosis"] = r.kurtosis;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["distribution"] = r.distribution;
    j["back_attempts"] = r.back_attempts ? ordered_json(*r.back_attempts) : ordered_json(nullptr);
    j["speedup"] = r.speedup ? ordered_json(*r.speedup) : ordered_json(nullptr);
    j["count"] = r.count;
    arr.push_back(std::move(j));
  }
  return arr;
}

ordered_json manifest_json(const CampaignResult& result, const ExperimentConfig& cfg,
                           std::string_view status, const std::vector<std::string>& files,
                           std::string_view error) {
  ordered_json m;
  m["artifact"] = "lvqueens";
  m["version"] = kVersion;
  m["status"] = status;
  if (!error.empty()) m["error"] = error;

  ordered_json config;
  config["n_values"] = cfg.n_values;
  config["trials_per_n"] = cfg.trials_per_n;
  config["master_seed"] = cfg.master_seed;
  config["attempts_budget"] =
      cfg.attempts_budget ? ordered_json(*cfg.attempts_budget) : ordered_json(nullptr);
  config["bin_count"] = cfg.bin_count;
  config["parallelism"] = cfg.parallelism;
  config["skip_backtracking_above"] = cfg.skip_backtracking_above;
  config["record_timing"] = cfg.record_timing;
  m["config"] = std::move(config);

  ordered_json sizes = ordered_json::array();
  for (const SizeCampaign& c : result.sizes) {
    ordered_json s;
    s["n"] = c.n;
    s["trials"] = c.trials.size();
    s["ok"] = c.ok_count;
    s["budget_exhausted"] = c.exhausted_count;
    s["backtracking"] = c.backtracking.has_value();
    s["warnings"] = c.warnings;
    sizes.push_back(std::move(s));
  }
  m["sizes"] = std::move(sizes);
  m["files"] = files;
  return m;
}

std::ifstream open_for_read(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open {}", path.string()));
  return in;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <class T>
T parse_number(const std::string& text, const fs::path& path, std::size_t line_no, int base = 10) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (ec != std::errc() || ptr != last) {
    throw IoError(fmt::format("{}:{}: bad number '{}'", path.string(), line_no, text));
  }
  return value;
}

// Reads lines after the header, which must match exactly.
std::vector<std::string> data_lines(const fs::path& path, std::string_view header) {
  std::ifstream in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) throw IoError(fmt::format("{}: empty file", path.string()));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw IoError(fmt::format("{}: unexpected header '{}'", path.string(), line));
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

std::string format_decimal(double value) {
  char buf[512];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc()) throw std::invalid_argument("value too large to format");
  return std::string(buf, ptr);
}

void check_output_dir(const ExperimentConfig& cfg) {
  const fs::path& dir = cfg.output_dir;
  if (dir.empty()) throw IoError("no output directory given");
  std::error_code ec;
  if (!fs::exists(dir, ec)) return;
  if (!fs::is_directory(dir, ec)) {
    throw IoError(fmt::format("{} exists and is not a directory", dir.string()));
  }
  if (cfg.overwrite) return;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (is_result_file(entry.path())) {
      throw IoError(fmt::format("{} already holds results ({}); pass the overwrite flag to replace them",
                                dir.string(), entry.path().filename().string()));
    }
  }
  if (ec) throw IoError(fmt::format("cannot list {}: {}", dir.string(), ec.message()));
}

void emit_outputs(const CampaignResult& result, const ExperimentConfig& cfg) {
  check_output_dir(cfg);
  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec) {
    throw IoError(fmt::format("cannot create {}: {}", cfg.output_dir.string(), ec.message()));
  }

  Writer writer(cfg.output_dir);
  try {
    for (const SizeCampaign& c : result.sizes) {
      writer.write(fmt::format("raw_n{}.csv", c.n), raw_csv(c));
      writer.write(fmt::format("solutions_n{}.csv", c.n), solutions_csv(c));
      if (c.hist) writer.write(fmt::format("hist_n{}.csv", c.n), hist_csv(*c.hist));
    }
    if (!result.sizes.empty()) {
      const std::vector<SummaryRow> rows = result.rows();
      writer.write("summary.csv", summary_csv(rows));
      writer.write("summary.json", summary_json(rows).dump(2) + "\n");
    }
    std::vector<std::string> files = writer.written();
    files.emplace_back("manifest.json");
    writer.write("manifest.json", manifest_json(result, cfg, "complete", files, {}).dump(2) + "\n");
  } catch (const IoError& e) {
    try {
      Writer fallback(cfg.output_dir);
      fallback.write("manifest.json",
                     manifest_json(result, cfg, "partial", writer.written(), e.what()).dump(2) + "\n");
    } catch (const IoError&) {
      // Nothing more can be done; the original error is the useful one.
    }
    throw;
  }
}

std::vector<TrialRecord> read_raw_csv(const fs::path& path) {
  std::vector<TrialRecord> out;
  std::size_t line_no = 1;
  for (const std::string& line : data_lines(path, kRawHeader)) {
    ++line_no;
    const auto f = split(line, ',');
    if (f.size() != 7) throw IoError(fmt::format("{}:{}: expected 7 fields", path.string(), line_no));
    TrialRecord t;
    t.n = parse_number<int>(f[0], path, line_no);
    t.trial = parse_number<std::uint64_t>(f[1], path, line_no);
    t.seed = parse_number<std::uint64_t>(f[2], path, line_no);
    t.attempts = parse_number<std::uint64_t>(f[3], path, line_no);
    t.restarts = parse_number<std::uint64_t>(f[4], path, line_no);
    t.duration_ns = parse_number<std::int64_t>(f[5], path, line_no);
    if (f[6] == status_name(TrialStatus::ok)) {
      t.status = TrialStatus::ok;
    } else if (f[6] == status_name(TrialStatus::budget_exhausted)) {
      t.status = TrialStatus::budget_exhausted;
    } else {
      throw IoError(fmt::format("{}:{}: unknown status '{}'", path.string(), line_no, f[6]));
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<SolutionRecord> read_solutions_csv(const fs::path& path) {
  std::vector<SolutionRecord> out;
  std::size_t line_no = 1;
  for (const std::string& line : data_lines(path, kSolutionsHeader)) {
    ++line_no;
    const auto f = split(line, ',');
    if (f.size() != 3) throw IoError(fmt::format("{}:{}: expected 3 fields", path.string(), line_no));
    SolutionRecord s;
    s.trial = parse_number<std::uint64_t>(f[0], path, line_no);
    s.hash = parse_number<std::uint64_t>(f[1], path, line_no, 16);
    for (const std::string& c : split(f[2], ' ')) {
      if (!c.empty()) s.columns.push_back(parse_number<int>(c, path, line_no));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SummaryRow> read_summary_json(const fs::path& path) {
  std::ifstream in = open_for_read(path);
  std::vector<SummaryRow> rows;
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    for (const auto& j : doc) {
      SummaryRow r;
      r.n = j.at("n").get<int>();
      r.mean = j.at("mean").get<double>();
      r.median = j.at("median").get<double>();
      r.mode = j.at("mode").get<double>();
      r.skew = j.at("skew").get<double>();
      r.kurtosis = j.at("kurtosis").get<double>();
      r.lower = j.at("lower").get<double>();
      r.upper = j.at("upper").get<double>();
      r.distribution = j.at("distribution").get<std::string>();
      if (!j.at("back_attempts").is_null()) r.back_attempts = j.at("back_attempts").get<std::uint64_t>();
      if (!j.at("speedup").is_null()) r.speedup = j.at("speedup").get<double>();
      r.count = j.at("count").get<std::size_t>();
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(fmt::format("{}: {}", path.string(), e.what()));
  }
  return rows;
}

}  // namespace lvq
