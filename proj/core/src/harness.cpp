#include "lvqueens/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace lvq {

void validate(const ExperimentConfig& cfg) {
  if (cfg.trials_per_n < 1) throw std::invalid_argument("trials_per_n must be >= 1");
  if (cfg.bin_count < 1) throw std::invalid_argument("bin_count must be >= 1");
  if (cfg.parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  for (int n : cfg.n_values) {
    if (n != 1 && n < 4) {
      throw std::invalid_argument(fmt::format("board size {} is not solvable (need n = 1 or n >= 4)", n));
    }
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, int n, std::uint64_t trial_index) {
  return mix_seed({master_seed, static_cast<std::uint64_t>(n), trial_index});
}

std::string_view status_name(TrialStatus s) {
  switch (s) {
    case TrialStatus::ok: return "ok";
    case TrialStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::vector<SummaryRow> CampaignResult::rows() const {
  std::vector<SummaryRow> out;
  for (const SizeCampaign& s : sizes) {
    if (s.summary) out.push_back(*s.summary);
  }
  return out;
}

double compute_speedup(std::uint64_t back_attempts, double lv_mean) {
  if (!(lv_mean > 0.0)) throw std::invalid_argument("speedup needs a positive mean");
  return static_cast<double>(back_attempts) / lv_mean;
}

namespace {

TrialRecord run_one(BoardSize n, std::uint64_t trial, const ExperimentConfig& cfg) {
  TrialRecord rec;
  rec.n = n.value();
  rec.trial = trial;
  rec.seed = trial_seed(cfg.master_seed, n.value(), trial);
  LasVegasOptions options;
  options.attempts_budget = cfg.attempts_budget;
  try {
    const TrialOutcome out = las_vegas(n, rec.seed, options);
    const Verdict verdict = verify_solution(out.solution);
    if (!verdict) {
      throw std::logic_error(fmt::format("trial {} of n = {} produced an invalid board: {}", trial,
                                         n.value(), verdict.reason));
    }
    rec.attempts = out.attempts;
    rec.restarts = out.restarts;
    rec.duration_ns = cfg.record_timing ? out.duration_ns : 0;
    rec.columns = out.solution.columns_by_row();
  } catch (const BudgetExhausted& e) {
    rec.status = TrialStatus::budget_exhausted;
    rec.attempts = e.attempts();
    rec.restarts = e.restarts();
  }
  return rec;
}

}  // namespace

std::vector<TrialRecord> run_trials(int n, const ExperimentConfig& cfg) {
  const BoardSize size(n);
  std::vector<TrialRecord> records(cfg.trials_per_n);
  const auto workers = static_cast<unsigned>(
      std::min<std::size_t>(std::max(1U, cfg.parallelism), cfg.trials_per_n));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= records.size()) return;
      try {
        records[i] = run_one(size, i, cfg);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(records.size());
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<double> ok_attempts(const std::vector<TrialRecord>& trials) {
  std::vector<double> out;
  out.reserve(trials.size());
  for (const TrialRecord& t : trials) {
    if (t.status == TrialStatus::ok) out.push_back(static_cast<double>(t.attempts));
  }
  return out;
}

SizeCampaign run_size(int n, const ExperimentConfig& cfg) {
  SizeCampaign c;
  c.n = n;
  c.trials = run_trials(n, cfg);
  const std::vector<double> attempts = ok_attempts(c.trials);
  c.ok_count = attempts.size();
  c.exhausted_count = c.trials.size() - c.ok_count;
  if (c.exhausted_count > 0) {
    c.warnings.push_back(fmt::format("{} trial(s) hit the attempts budget and were excluded",
                                     c.exhausted_count));
  }

  if (n <= cfg.skip_backtracking_above) c.backtracking = solve_backtracking(BoardSize(n));

  if (attempts.empty()) {
    c.warnings.emplace_back("no successful trials; no statistics");
    return c;
  }
  c.hist = histogram(attempts, cfg.bin_count);

  SampleStats stats;
  try {
    stats = describe(attempts);
  } catch (const std::invalid_argument& e) {
    c.warnings.push_back(fmt::format("no summary row: {}", e.what()));
    return c;
  }

  SummaryRow row;
  row.n = n;
  row.mean = stats.mean;
  row.median = stats.median;
  row.mode = stats.mode;
  row.skew = stats.skewness;
  row.kurtosis = stats.kurtosis;
  row.lower = stats.lower;
  row.upper = stats.upper;
  row.count = stats.count;
  row.distribution = "none";
  if (attempts.size() >= kMinFitSamples) {
    try {
      const BestFit fit = best_fit(attempts);
      row.distribution = std::string(family_name(fit.best.family()));
      for (const auto& [family, message] : fit.failures) {
        c.warnings.push_back(fmt::format("{} fit failed: {}", family_name(family), message));
      }
    } catch (const FitError& e) {
      c.warnings.push_back(fmt::format("distribution fit failed: {}", e.what()));
    }
  } else {
    c.warnings.push_back(fmt::format("fewer than {} samples; distribution not fitted", kMinFitSamples));
  }
  if (c.backtracking) {
    row.back_attempts = c.backtracking->candidate_tests;
    row.speedup = compute_speedup(c.backtracking->candidate_tests, row.mean);
  }
  c.summary = row;
  return c;
}

CampaignResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  CampaignResult result;
  result.sizes.reserve(cfg.n_values.size());
  for (int n : cfg.n_values) result.sizes.push_back(run_size(n, cfg));
  return result;
}

CampaignResult run_campaign(const ExperimentConfig& cfg) {
  validate(cfg);
  check_output_dir(cfg);
  CampaignResult result = run_experiment(cfg);
  emit_outputs(result, cfg);
  return result;
}

}  // namespace lvq
