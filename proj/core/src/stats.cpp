#include "lvqueens/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lvq {

double percentile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("percentile of empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("percentile rank outside [0, 1]");
  const double rank = p * static_cast<double>(sorted.size() - 1);
  const auto below = static_cast<std::size_t>(std::floor(rank));
  const std::size_t above = std::min(below + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(below);
  return sorted[below] + frac * (sorted[above] - sorted[below]);
}

SampleStats describe(std::span<const double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("describe needs at least two samples");

  std::vector<double> sorted(samples.begin(), samples.end());
  std::ranges::sort(sorted);
  const auto count = static_cast<double>(sorted.size());

  double sum = 0.0;
  for (double x : sorted) sum += x;
  const double mean = sum / count;

  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (double x : sorted) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= count;
  m3 /= count;
  m4 /= count;
  if (!(m2 > 0.0)) throw std::invalid_argument("describe needs a sample with non-zero variance");

  double mode = sorted.front();
  std::size_t best_run = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (j - i > best_run) {
      best_run = j - i;
      mode = sorted[i];
    }
    i = j;
  }

  return SampleStats{
      .count = sorted.size(),
      .mean = mean,
      .median = percentile_sorted(sorted, 0.5),
      .mode = mode,
      .skewness = m3 / std::pow(m2, 1.5),
      .kurtosis = m4 / (m2 * m2) - 3.0,
      .lower = percentile_sorted(sorted, kLowerQuantile),
      .upper = percentile_sorted(sorted, kUpperQuantile),
  };
}

Histogram histogram(std::span<const double> samples, std::size_t bin_count) {
  if (samples.empty()) throw std::invalid_argument("histogram of empty sample");
  if (bin_count == 0) throw std::invalid_argument("histogram needs at least one bin");

  const auto [lo_it, hi_it] = std::ranges::minmax_element(samples);
  const double lo = *lo_it;
  const double hi = *hi_it;

  Histogram h;
  if (lo == hi) {
    h.bin_edges = {lo - 0.5, lo + 0.5};
    h.counts = {samples.size()};
    return h;
  }

  const double width = (hi - lo) / static_cast<double>(bin_count);
  h.bin_edges.resize(bin_count + 1);
  for (std::size_t i = 0; i < bin_count; ++i) {
    h.bin_edges[i] = lo + static_cast<double>(i) * width;
  }
  h.bin_edges[bin_count] = hi;
  h.counts.assign(bin_count, 0);

  for (double x : samples) {
    const auto it = std::ranges::upper_bound(h.bin_edges, x);
    auto bin = static_cast<std::size_t>(it - h.bin_edges.begin());
    bin = std::clamp<std::size_t>(bin, 1, bin_count) - 1;
    ++h.counts[bin];
  }
  return h;
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("KS statistic of empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::ranges::sort(sorted);
  const auto count = static_cast<double>(sorted.size());

  // Equal values form one step of the empirical cdf, from i/N to j/N. The
  // model is compared at the value and just left of it, which is exact for
  // continuous and step cdfs alike.
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    const double v = sorted[i];
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == v) ++j;
    const double f = cdf(v);
    const double f_left = cdf(std::nextafter(v, -std::numeric_limits<double>::infinity()));
    d = std::max({d, std::abs(static_cast<double>(j) / count - f),
                  std::abs(f_left - static_cast<double>(i) / count)});
    i = j;
  }
  return std::min(d, 1.0);
}

}  // namespace lvq
