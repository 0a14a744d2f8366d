#pragma once

// Seeded trial campaigns over a range of board sizes, with the backtracking
// comparison and the on-disk result formats:
//
//   raw_n{N}.csv        n,trial,seed,attempts,restarts,duration_ns,status
//   solutions_n{N}.csv  trial,solution_hash,columns
//   hist_n{N}.csv       bin_lo,bin_hi,count
//   summary.csv         n,mean,median,mode,skew,kurtosis,lower,upper,
//                       distribution,back_attempts,speedup
//   summary.json        the same rows (plus count) as a JSON array
//   manifest.json       config, version, per-n counts, files, status

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lvqueens/backtracking.hpp"
#include "lvqueens/las_vegas.hpp"
#include "lvqueens/stats.hpp"

namespace lvq {

inline constexpr std::uint64_t kDefaultMasterSeed = 20240917;

struct ExperimentConfig {
  std::vector<int> n_values;
  std::size_t trials_per_n = 1000;
  std::uint64_t master_seed = kDefaultMasterSeed;
  std::optional<std::uint64_t> attempts_budget;
  std::size_t bin_count = 50;
  std::filesystem::path output_dir;
  unsigned parallelism = 1;
  // Backtracking is skipped for n above this.
  int skip_backtracking_above = 24;
  bool overwrite = false;
  // Wall-clock durations go into raw CSVs only when set; otherwise the column
  // holds 0 so that files are byte-for-byte reproducible.
  bool record_timing = false;
};

// Throws std::invalid_argument on an unusable config.
void validate(const ExperimentConfig& cfg);

// Per-trial seed; depends only on its arguments.
std::uint64_t trial_seed(std::uint64_t master_seed, int n, std::uint64_t trial_index);

enum class TrialStatus { ok, budget_exhausted };

std::string_view status_name(TrialStatus s);

struct TrialRecord {
  int n = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t attempts = 0;
  std::uint64_t restarts = 0;
  std::int64_t duration_ns = 0;
  TrialStatus status = TrialStatus::ok;
  // Queen column per row; empty unless status is ok.
  std::vector<int> columns;
};

struct SummaryRow {
  int n = 0;
  double mean = 0.0;
  double median = 0.0;
  double mode = 0.0;
  double skew = 0.0;
  double kurtosis = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  // Best-fit family name, or "none" when no family could be fitted.
  std::string distribution;
  std::optional<std::uint64_t> back_attempts;
  std::optional<double> speedup;
  std::size_t count = 0;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

struct SizeCampaign {
  int n = 0;
  std::vector<TrialRecord> trials;
  std::size_t ok_count = 0;
  std::size_t exhausted_count = 0;
  std::optional<Histogram> hist;
  std::optional<BacktrackOutcome> backtracking;
  std::optional<SummaryRow> summary;
  std::vector<std::string> warnings;
};

struct CampaignResult {
  std::vector<SizeCampaign> sizes;

  std::vector<SummaryRow> rows() const;
};

// back_attempts / lv_mean. Throws std::invalid_argument unless lv_mean > 0.
double compute_speedup(std::uint64_t back_attempts, double lv_mean);

// Runs trials_per_n Las Vegas trials for n over `parallelism` workers. The
// result is in trial order and independent of the worker count.
std::vector<TrialRecord> run_trials(int n, const ExperimentConfig& cfg);

// Trials, backtracking and statistics for one n; no I/O.
SizeCampaign run_size(int n, const ExperimentConfig& cfg);

// Everything in cfg.n_values, in order; no I/O.
CampaignResult run_experiment(const ExperimentConfig& cfg);

// Throws IoError if cfg.output_dir already holds results (and !cfg.overwrite)
// or exists but is not a directory.
void check_output_dir(const ExperimentConfig& cfg);

// Writes every output file into cfg.output_dir. Refuses to touch a directory
// that already holds results unless cfg.overwrite. On a write failure a
// manifest with status "partial" listing the files written so far is attempted
// before the IoError propagates.
void emit_outputs(const CampaignResult& result, const ExperimentConfig& cfg);

// run_experiment + emit_outputs.
CampaignResult run_campaign(const ExperimentConfig& cfg);

// Readers for the formats above. Throw IoError on unreadable or malformed
// files.
std::vector<TrialRecord> read_raw_csv(const std::filesystem::path& path);
std::vector<SummaryRow> read_summary_json(const std::filesystem::path& path);

struct SolutionRecord {
  std::uint64_t trial = 0;
  std::uint64_t hash = 0;
  std::vector<int> columns;
};
std::vector<SolutionRecord> read_solutions_csv(const std::filesystem::path& path);

// Shortest round-trip decimal in fixed notation (never an exponent).
std::string format_decimal(double value);

// Attempt counts of the ok rows, as doubles for the stats functions.
std::vector<double> ok_attempts(const std::vector<TrialRecord>& trials);

}  // namespace lvq
