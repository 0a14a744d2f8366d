#include <numeric>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "lvqueens/harness.hpp"
#include "test_support.hpp"

using doctest::Approx;
using lvq::testing::slurp;
using lvq::testing::TempDir;
namespace fs = std::filesystem;

namespace {

lvq::ExperimentConfig small_config(const fs::path& dir) {
  lvq::ExperimentConfig cfg;
  cfg.n_values = {4, 5, 6, 8};
  cfg.trials_per_n = 120;
  cfg.master_seed = 42;
  cfg.output_dir = dir;
  cfg.bin_count = 10;
  return cfg;
}

std::string first_line(const fs::path& p) {
  const std::string s = slurp(p);
  return s.substr(0, s.find('\n'));
}

}  // namespace

TEST_CASE("trial_seed depends only on its inputs") {
  CHECK(lvq::trial_seed(1, 8, 0) == lvq::trial_seed(1, 8, 0));
  std::set<std::uint64_t> seen;
  for (int n = 4; n <= 10; ++n) {
    for (std::uint64_t i = 0; i < 200; ++i) seen.insert(lvq::trial_seed(7, n, i));
  }
  CHECK(seen.size() == 7 * 200);
  CHECK(lvq::trial_seed(7, 8, 3) != lvq::trial_seed(8, 8, 3));
}

TEST_CASE("compute_speedup") {
  CHECK(lvq::compute_speedup(26, 16.585) == Approx(1.568).epsilon(1e-3));
  CHECK(lvq::compute_speedup(876, 103.268) == Approx(8.483).epsilon(1e-3));
  CHECK(lvq::compute_speedup(10, 10.0) == 1.0);
  CHECK_THROWS_AS(lvq::compute_speedup(10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lvq::compute_speedup(10, -2.0), std::invalid_argument);
}

TEST_CASE("validate rejects unusable configs") {
  lvq::ExperimentConfig cfg = small_config("out");
  CHECK_NOTHROW(lvq::validate(cfg));
  auto bad = cfg;
  bad.trials_per_n = 0;
  CHECK_THROWS_AS(lvq::validate(bad), std::invalid_argument);
  bad = cfg;
  bad.n_values = {4, 3};
  CHECK_THROWS_AS(lvq::validate(bad), std::invalid_argument);
  bad = cfg;
  bad.bin_count = 0;
  CHECK_THROWS_AS(lvq::validate(bad), std::invalid_argument);
}

TEST_CASE("run_trials is independent of the worker count") {
  lvq::ExperimentConfig cfg = small_config("unused");
  cfg.trials_per_n = 300;
  const auto serial = lvq::run_trials(9, cfg);
  cfg.parallelism = 4;
  const auto parallel = lvq::run_trials(9, cfg);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].trial == i);
    CHECK(serial[i].seed == parallel[i].seed);
    CHECK(serial[i].attempts == parallel[i].attempts);
    CHECK(serial[i].restarts == parallel[i].restarts);
    CHECK(serial[i].columns == parallel[i].columns);
    CHECK(serial[i].duration_ns == 0);
  }
}

TEST_CASE("run_size fills summary, histogram and backtracking") {
  lvq::ExperimentConfig cfg = small_config("unused");
  cfg.trials_per_n = 200;
  const lvq::SizeCampaign c = lvq::run_size(8, cfg);
  CHECK(c.ok_count == 200);
  CHECK(c.exhausted_count == 0);
  REQUIRE(c.hist.has_value());
  CHECK(std::accumulate(c.hist->counts.begin(), c.hist->counts.end(), std::size_t{0}) == 200);
  REQUIRE(c.backtracking.has_value());
  CHECK(c.backtracking->candidate_tests == 876);
  REQUIRE(c.summary.has_value());
  CHECK(c.summary->back_attempts == 876);
  CHECK(*c.summary->speedup == Approx(876.0 / c.summary->mean));
  CHECK(c.summary->count == 200);

  cfg.skip_backtracking_above = 6;
  const lvq::SizeCampaign skipped = lvq::run_size(8, cfg);
  CHECK_FALSE(skipped.backtracking.has_value());
  REQUIRE(skipped.summary.has_value());
  CHECK_FALSE(skipped.summary->back_attempts.has_value());
  CHECK_FALSE(skipped.summary->speedup.has_value());
}

TEST_CASE("budget exhaustion is recorded per trial") {
  lvq::ExperimentConfig cfg = small_config("unused");
  cfg.trials_per_n = 100;
  cfg.attempts_budget = 10;
  const lvq::SizeCampaign c = lvq::run_size(10, cfg);
  CHECK(c.ok_count + c.exhausted_count == 100);
  CHECK(c.exhausted_count > 0);
  for (const auto& t : c.trials) {
    if (t.status == lvq::TrialStatus::budget_exhausted) {
      CHECK(t.attempts == 10);
      CHECK(t.columns.empty());
    } else {
      CHECK(t.attempts <= 10);
    }
  }
}

TEST_CASE("emit_outputs writes every file with its header") {
  TempDir dir("emit");
  const auto cfg = small_config(dir.path());
  const lvq::CampaignResult result = lvq::run_campaign(cfg);

  for (int n : cfg.n_values) {
    const std::string s = std::to_string(n);
    CHECK(first_line(dir.path() / ("raw_n" + s + ".csv")) ==
          "n,trial,seed,attempts,restarts,duration_ns,status");
    CHECK(first_line(dir.path() / ("solutions_n" + s + ".csv")) == "trial,solution_hash,columns");
    CHECK(first_line(dir.path() / ("hist_n" + s + ".csv")) == "bin_lo,bin_hi,count");
  }
  CHECK(first_line(dir.path() / "summary.csv") ==
        "n,mean,median,mode,skew,kurtosis,lower,upper,distribution,back_attempts,speedup");

  const auto manifest = nlohmann::json::parse(slurp(dir.path() / "manifest.json"));
  CHECK(manifest["status"] == "complete");
  CHECK(manifest["sizes"].size() == cfg.n_values.size());
  CHECK(manifest["files"].size() == 3 * cfg.n_values.size() + 3);  // includes itself

  // Every summary row has 11 fields.
  std::istringstream summary(slurp(dir.path() / "summary.csv"));
  std::string line;
  std::getline(summary, line);
  std::size_t rows = 0;
  while (std::getline(summary, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 10);
    ++rows;
  }
  CHECK(rows == cfg.n_values.size());
  CHECK(result.rows().size() == rows);
}

TEST_CASE("raw CSV and summary JSON round-trip") {
  TempDir dir("roundtrip");
  const auto cfg = small_config(dir.path());
  const lvq::CampaignResult result = lvq::run_campaign(cfg);

  CHECK(lvq::read_summary_json(dir.path() / "summary.json") == result.rows());

  const auto raw = lvq::read_raw_csv(dir.path() / "raw_n8.csv");
  const auto& trials = result.sizes.back().trials;
  REQUIRE(raw.size() == trials.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    CHECK(raw[i].seed == trials[i].seed);
    CHECK(raw[i].attempts == trials[i].attempts);
    CHECK(raw[i].restarts == trials[i].restarts);
    CHECK(raw[i].status == trials[i].status);
  }
}

TEST_CASE("solution hashes re-verify") {
  TempDir dir("hashes");
  const auto cfg = small_config(dir.path());
  (void)lvq::run_campaign(cfg);
  for (int n : cfg.n_values) {
    const auto recs = lvq::read_solutions_csv(dir.path() / ("solutions_n" + std::to_string(n) + ".csv"));
    CHECK(recs.size() == cfg.trials_per_n);
    for (const auto& r : recs) {
      const lvq::Solution s = lvq::Solution::from_columns(r.columns);
      REQUIRE(s.size().value() == n);
      REQUIRE(lvq::verify_solution(s).ok);
      REQUIRE(s.hash() == r.hash);
    }
  }
}

TEST_CASE("reruns are byte-identical across worker counts") {
  TempDir a("serial");
  TempDir b("parallel");
  auto cfg = small_config(a.path());
  (void)lvq::run_campaign(cfg);
  cfg.output_dir = b.path();
  cfg.parallelism = 3;
  (void)lvq::run_campaign(cfg);
  for (const auto& entry : fs::directory_iterator(a.path())) {
    const std::string name = entry.path().filename().string();
    if (name == "manifest.json") continue;  // records the worker count
    CHECK_MESSAGE(slurp(entry.path()) == slurp(b.path() / name), name);
  }
}

TEST_CASE("existing results are not overwritten") {
  TempDir dir("overwrite");
  auto cfg = small_config(dir.path());
  cfg.n_values = {5};
  (void)lvq::run_campaign(cfg);
  const std::string before = slurp(dir.path() / "raw_n5.csv");
  cfg.master_seed = 43;
  CHECK_THROWS_AS(lvq::run_campaign(cfg), lvq::IoError);
  CHECK(slurp(dir.path() / "raw_n5.csv") == before);
  cfg.overwrite = true;
  (void)lvq::run_campaign(cfg);
  CHECK(slurp(dir.path() / "raw_n5.csv") != before);
}

TEST_CASE("output dir that is a regular file is an I/O error") {
  TempDir dir("notadir");
  const fs::path file = dir.path() / "plain";
  std::ofstream(file) << "x";
  auto cfg = small_config(file);
  CHECK_THROWS_AS(lvq::check_output_dir(cfg), lvq::IoError);
}

TEST_CASE("empty campaign writes only the manifest") {
  TempDir dir("empty");
  auto cfg = small_config(dir.path());
  cfg.n_values.clear();
  (void)lvq::run_campaign(cfg);
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir.path())) names.push_back(e.path().filename().string());
  CHECK(names == std::vector<std::string>{"manifest.json"});
}

TEST_CASE("write failure leaves a partial manifest") {
  TempDir dir("partial");
  auto cfg = small_config(dir.path());
  cfg.n_values = {4, 5};
  cfg.overwrite = true;
  fs::create_directories(dir.path() / "summary.csv");
  CHECK_THROWS_AS(lvq::run_campaign(cfg), lvq::IoError);
  const auto manifest = nlohmann::json::parse(slurp(dir.path() / "manifest.json"));
  CHECK(manifest["status"] == "partial");
  CHECK(manifest.contains("error"));
  const auto files = manifest["files"].get<std::vector<std::string>>();
  CHECK(std::find(files.begin(), files.end(), "raw_n4.csv") != files.end());
  CHECK(std::find(files.begin(), files.end(), "summary.csv") == files.end());
}

TEST_CASE("readers reject malformed input") {
  TempDir dir("malformed");
  std::ofstream(dir.path() / "bad.csv") << "n,trial\n1,2\n";
  CHECK_THROWS_AS(lvq::read_raw_csv(dir.path() / "bad.csv"), lvq::IoError);
  std::ofstream(dir.path() / "bad2.csv") << "n,trial,seed,attempts,restarts,duration_ns,status\n4,0,1,x,0,0,ok\n";
  CHECK_THROWS_AS(lvq::read_raw_csv(dir.path() / "bad2.csv"), lvq::IoError);
  CHECK_THROWS_AS(lvq::read_raw_csv(dir.path() / "missing.csv"), lvq::IoError);
  std::ofstream(dir.path() / "bad.json") << "{not json";
  CHECK_THROWS_AS(lvq::read_summary_json(dir.path() / "bad.json"), lvq::IoError);
}

TEST_CASE("format_decimal") {
  CHECK(lvq::format_decimal(4.0) == "4");
  CHECK(lvq::format_decimal(0.1) == "0.1");
  CHECK(lvq::format_decimal(103.268) == "103.268");
  CHECK(lvq::format_decimal(1e-7) == "0.0000001");
  for (double v : {1.0 / 3.0, 2.718281828459045, 12345.678901234}) {
    CHECK(std::stod(lvq::format_decimal(v)) == v);
  }
}
