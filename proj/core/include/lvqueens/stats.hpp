#pragma once

// Descriptive statistics, histograms, and maximum-likelihood fitting with
// Kolmogorov-Smirnov model selection, aimed at run-length samples (positive
// attempt counts with a long right tail).

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lvqueens/errors.hpp"

namespace lvq {

struct SampleStats {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  // Most frequent value; ties go to the smallest.
  double mode = 0.0;
  // Fisher-Pearson g1 = m3 / m2^(3/2), central moments with 1/N.
  double skewness = 0.0;
  // m4 / m2^2 - 3.
  double kurtosis = 0.0;
  // kLowerQuantile and kUpperQuantile percentiles.
  double lower = 0.0;
  double upper = 0.0;
};

// Lower/Upper bracket the central 90% of the sample.
inline constexpr double kLowerQuantile = 0.05;
inline constexpr double kUpperQuantile = 0.95;

// Throws std::invalid_argument for fewer than two samples or zero variance.
SampleStats describe(std::span<const double> samples);

// Linear interpolation between order statistics at rank p * (N - 1).
// Precondition: sorted is ascending and non-empty, 0 <= p <= 1.
double percentile_sorted(std::span<const double> sorted, double p);

struct Histogram {
  std::vector<double> bin_edges;
  std::vector<std::size_t> counts;
};

// bin_count equal-width bins over [min, max]; bins are half-open except the
// last, which also takes max. An all-equal sample yields one bin of width 1
// centred on the value. Throws std::invalid_argument on empty input or
// bin_count == 0.
Histogram histogram(std::span<const double> samples, std::size_t bin_count);

// sup_x |F_N(x) - F(x)| for the right-continuous empirical cdf F_N. Tied
// samples are handled as one step, so integer-valued data is not penalised.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

enum class Family { gamma, weibull_min, pareto, exponential };

inline constexpr std::array<Family, 4> kCandidateFamilies = {
    Family::gamma, Family::weibull_min, Family::pareto, Family::exponential};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// All families have location 0.
//   gamma:        shape k, scale theta
//   weibull-min:  shape c, scale lambda
//   pareto:       shape alpha, scale x_m (support x >= x_m)
//   exponential:  shape fixed at 1, scale = mean
struct Distribution {
  Family family = Family::exponential;
  double shape = 1.0;
  double scale = 1.0;

  double cdf(double x) const;
  double log_pdf(double x) const;
};

struct FitResult {
  Distribution dist;
  double log_likelihood = 0.0;
  double ks_statistic = 1.0;
  std::size_t iterations = 0;

  Family family() const noexcept { return dist.family; }
};

// Optimizer did not converge; best_so_far holds the last simplex vertex.
class FitError : public Error {
 public:
  FitError(const std::string& what, std::optional<FitResult> best_so_far)
      : Error(what), best_so_far_(std::move(best_so_far)) {}

  const std::optional<FitResult>& best_so_far() const noexcept { return best_so_far_; }

 private:
  std::optional<FitResult> best_so_far_;
};

inline constexpr std::size_t kMinFitSamples = 30;

// Maximum likelihood with location pinned at 0. Exponential is closed form.
// Gamma and Weibull run the simplex over (log shape, log scale). Pareto pins
// x_m at the sample minimum (the likelihood increases in x_m up to it) and
// runs the simplex over log alpha. Throws std::invalid_argument for fewer
// than kMinFitSamples samples or non-positive values; FitError on
// non-convergence.
FitResult fit_mle(std::span<const double> samples, Family family);

struct BestFit {
  FitResult best;
  // One entry per family that fitted, in kCandidateFamilies order.
  std::vector<FitResult> fits;
  // Families that failed, with the error message.
  std::vector<std::pair<Family, std::string>> failures;
};

// Fits every candidate and keeps the smallest KS statistic; equal statistics
// go to the earlier family. Throws FitError only if every family fails.
BestFit best_fit(std::span<const double> samples);

}  // namespace lvq
