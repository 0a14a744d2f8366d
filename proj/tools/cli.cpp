#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "lvqueens/backtracking.hpp"
#include "lvqueens/harness.hpp"
#include "lvqueens/las_vegas.hpp"
#include "lvqueens/stats.hpp"
#include "lvqueens/version.hpp"

namespace lvq::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --seed wins over $LVQUEENS_SEED, which wins over the built-in default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LVQUEENS_SEED"); env != nullptr && *env != '\0') {
    const std::string_view text(env);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError(fmt::format("LVQUEENS_SEED is not an unsigned integer: '{}'", text));
    }
    return value;
  }
  return kDefaultMasterSeed;
}

struct SolveArgs {
  int n = 8;
  std::string algo = "lv";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
};

struct BenchArgs {
  int n_min = 4;
  int n_max = 35;
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned jobs = 0;
  std::optional<std::uint64_t> budget;
  int skip_bt_above = 24;
  std::size_t bins = 50;
  bool force = false;
  bool timing = false;
};

int do_solve(const SolveArgs& a, std::ostream& out) {
  const BoardSize n(a.n);
  if (a.algo == "bt") {
    const BacktrackOutcome r = solve_backtracking(n);
    fmt::print(out, "n = {}, algorithm = backtracking\n{}", n.value(), render(r.solution));
    fmt::print(out, "candidate_tests: {}\nduration_ns: {}\nverified: {}\n", r.candidate_tests,
               r.duration_ns, verify_solution(r.solution) ? "yes" : "no");
    return kOk;
  }
  const std::uint64_t seed = resolve_seed(a.seed);
  LasVegasOptions options;
  options.attempts_budget = a.budget;
  const TrialOutcome r = las_vegas(n, seed, options);
  fmt::print(out, "n = {}, algorithm = las-vegas, seed = {}\n{}", n.value(), seed, render(r.solution));
  fmt::print(out, "attempts: {}\nrestarts: {}\nduration_ns: {}\nverified: {}\n", r.attempts,
             r.restarts, r.duration_ns, verify_solution(r.solution) ? "yes" : "no");
  return kOk;
}

std::string optional_text(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n_min > a.n_max) throw UsageError("--n-min must not exceed --n-max");
  if (a.n_min < 1) throw UsageError("--n-min must be >= 1");
  if (a.trials < 1) throw UsageError("--trials must be >= 1");
  if (a.bins < 1) throw UsageError("--bins must be >= 1");

  ExperimentConfig cfg;
  for (int n = a.n_min; n <= a.n_max; ++n) {
    if (n == 2 || n == 3) {
      fmt::print(err, "note: skipping n = {} (no solution exists)\n", n);
      continue;
    }
    cfg.n_values.push_back(n);
  }
  cfg.trials_per_n = a.trials;
  cfg.master_seed = resolve_seed(a.seed);
  cfg.attempts_budget = a.budget;
  cfg.bin_count = a.bins;
  cfg.output_dir = a.out;
  cfg.parallelism = a.jobs > 0 ? a.jobs : std::max(1U, std::thread::hardware_concurrency());
  cfg.skip_backtracking_above = a.skip_bt_above;
  cfg.overwrite = a.force;
  cfg.record_timing = a.timing;

  const CampaignResult result = run_campaign(cfg);

  fmt::print(out, "{:>4} {:>12} {:>10} {:>8} {:>7} {:>8} {:>10} {:>12} {:>12} {:>14} {:>10}\n", "n",
             "mean", "median", "mode", "skew", "kurt", "lower", "upper", "dist", "back_attempts",
             "speedup");
  for (const SizeCampaign& c : result.sizes) {
    for (const std::string& w : c.warnings) fmt::print(err, "warning: n = {}: {}\n", c.n, w);
    if (!c.summary) continue;
    const SummaryRow& r = *c.summary;
    fmt::print(out, "{:>4} {:>12.3f} {:>10.1f} {:>8.1f} {:>7.3f} {:>8.3f} {:>10.2f} {:>12.2f} {:>12} {:>14} {:>10}\n",
               r.n, r.mean, r.median, r.mode, r.skew, r.kurtosis, r.lower, r.upper, r.distribution,
               optional_text(r.back_attempts),
               r.speedup ? fmt::format("{:.3f}", *r.speedup) : std::string("-"));
  }
  fmt::print(out, "results written to {}\n", cfg.output_dir.string());
  return kOk;
}

std::vector<double> load_attempts(const std::string& path, std::ostream& err) {
  const std::vector<TrialRecord> trials = read_raw_csv(path);
  std::vector<double> attempts = ok_attempts(trials);
  if (attempts.size() != trials.size()) {
    fmt::print(err, "note: ignoring {} row(s) whose status is not ok\n", trials.size() - attempts.size());
  }
  return attempts;
}

int do_stats(const std::string& input, std::ostream& out, std::ostream& err) {
  const std::vector<double> attempts = load_attempts(input, err);
  const SampleStats s = describe(attempts);
  fmt::print(out,
             "count: {}\nmean: {:.3f}\nmedian: {}\nmode: {}\nskewness: {:.3f}\nkurtosis: {:.3f}\n"
             "lower: {:.2f}\nupper: {:.2f}\n",
             s.count, s.mean, s.median, s.mode, s.skewness, s.kurtosis, s.lower, s.upper);
  return kOk;
}

int do_fit(const std::string& input, std::ostream& out, std::ostream& err) {
  const std::vector<double> attempts = load_attempts(input, err);
  const BestFit fit = best_fit(attempts);
  fmt::print(out, "{:<12} {:>14} {:>14} {:>18} {:>10}\n", "family", "shape", "scale", "log_likelihood",
             "ks");
  for (const FitResult& r : fit.fits) {
    fmt::print(out, "{:<12} {:>14.6g} {:>14.6g} {:>18.3f} {:>10.5f}\n", family_name(r.family()),
               r.dist.shape, r.dist.scale, r.log_likelihood, r.ks_statistic);
  }
  for (const auto& [family, message] : fit.failures) {
    fmt::print(out, "{:<12} failed: {}\n", family_name(family), message);
  }
  fmt::print(out, "best: {}\n", family_name(fit.best.family()));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Las Vegas and backtracking N-Queens solvers with a benchmark harness", "lvqueens"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve one board and print it");
  solve->add_option("--n", solve_args.n, "Board size")->required();
  solve->add_option("--algo", solve_args.algo, "lv (Las Vegas) or bt (backtracking)")
      ->check(CLI::IsMember({"lv", "bt"}));
  solve->add_option("--seed", solve_args.seed, "RNG seed (default: $LVQUEENS_SEED or built-in)");
  solve->add_option("--budget", solve_args.budget, "Abort after this many placements");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run a trial campaign and write result files");
  bench->add_option("--n-min", bench_args.n_min, "Smallest board size")->required();
  bench->add_option("--n-max", bench_args.n_max, "Largest board size")->required();
  bench->add_option("--trials", bench_args.trials, "Las Vegas trials per board size")
      ->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "Master seed (default: $LVQUEENS_SEED or built-in)");
  bench->add_option("--out", bench_args.out, "Output directory")->required();
  bench->add_option("--jobs", bench_args.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  bench->add_option("--budget", bench_args.budget, "Per-trial attempts budget");
  bench->add_option("--skip-backtracking-above", bench_args.skip_bt_above,
                    "Skip backtracking for larger boards")
      ->capture_default_str();
  bench->add_option("--bins", bench_args.bins, "Histogram bins")->capture_default_str();
  bench->add_flag("--force", bench_args.force, "Overwrite existing results in --out");
  bench->add_flag("--timing", bench_args.timing, "Record wall-clock durations in raw CSVs");

  std::string stats_input;
  auto* stats = app.add_subcommand("stats", "Describe the attempts column of a raw CSV");
  stats->add_option("--input", stats_input, "raw_n{N}.csv file")->required();

  std::string fit_input;
  auto* fit = app.add_subcommand("fit", "Fit candidate distributions to a raw CSV");
  fit->add_option("--input", fit_input, "raw_n{N}.csv file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  }

  try {
    if (*solve) return do_solve(solve_args, out);
    if (*bench) return do_bench(bench_args, out, err);
    if (*stats) return do_stats(stats_input, out, err);
    if (*fit) return do_fit(fit_input, out, err);
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const IoError& e) {
    fmt::print(err, "I/O error: {}\n", e.what());
    return kIoError;
  } catch (const std::exception& e) {
    // SolverError, FitError and rejected arguments such as n = 0.
    fmt::print(err, "error: {}\n", e.what());
    return kSolverError;
  }
  return kUsage;
}

}  // namespace lvq::cli
