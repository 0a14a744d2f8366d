#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>
#include <fmt/format.h>

#include "lvqueens/simplex.hpp"
#include "lvqueens/stats.hpp"

namespace lvq {

namespace {

using QuietPolicy = boost::math::policies::policy<
    boost::math::policies::domain_error<boost::math::policies::errno_on_error>,
    boost::math::policies::overflow_error<boost::math::policies::errno_on_error>,
    boost::math::policies::evaluation_error<boost::math::policies::errno_on_error>>;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Sorted copy plus the sufficient statistics the likelihoods need.
struct Prepared {
  std::vector<double> sorted;
  std::vector<double> logs;
  double mean = 0.0;
  double mean_log = 0.0;
  double variance = 0.0;

  std::size_t size() const noexcept { return sorted.size(); }
};

Prepared prepare(std::span<const double> samples) {
  if (samples.size() < kMinFitSamples) {
    throw std::invalid_argument(
        fmt::format("fitting needs at least {} samples, got {}", kMinFitSamples, samples.size()));
  }
  Prepared p;
  p.sorted.assign(samples.begin(), samples.end());
  std::ranges::sort(p.sorted);
  if (!(p.sorted.front() > 0.0) || !std::isfinite(p.sorted.back())) {
    throw std::invalid_argument("fitting needs strictly positive finite samples");
  }
  const auto n = static_cast<double>(p.size());
  p.logs.reserve(p.size());
  double sum = 0.0;
  double sum_log = 0.0;
  for (double x : p.sorted) {
    sum += x;
    p.logs.push_back(std::log(x));
    sum_log += p.logs.back();
  }
  p.mean = sum / n;
  p.mean_log = sum_log / n;
  double ss = 0.0;
  for (double x : p.sorted) ss += (x - p.mean) * (x - p.mean);
  p.variance = ss / n;
  return p;
}

FitResult finish(const Prepared& p, Distribution dist, std::size_t iterations) {
  FitResult r;
  r.dist = dist;
  r.iterations = iterations;
  double ll = 0.0;
  for (double x : p.sorted) ll += dist.log_pdf(x);
  r.log_likelihood = ll;
  r.ks_statistic = ks_statistic(p.sorted, [&dist](double x) { return dist.cdf(x); });
  return r;
}

FitResult run_simplex(const Prepared& p, Family family,
                      const std::function<double(std::span<const double>)>& mean_nll,
                      std::vector<double> start,
                      const std::function<Distribution(std::span<const double>)>& decode) {
  const SimplexResult s = minimize_simplex(mean_nll, std::move(start));
  const Distribution dist = decode(s.x);
  if (!s.converged || !std::isfinite(s.value)) {
    std::optional<FitResult> best;
    if (std::isfinite(s.value)) best = finish(p, dist, s.iterations);
    throw FitError(fmt::format("{} fit did not converge after {} iterations (shape {}, scale {})",
                               family_name(family), s.iterations, dist.shape, dist.scale),
                   std::move(best));
  }
  return finish(p, dist, s.iterations);
}

FitResult fit_gamma(const Prepared& p) {
  const double shape0 = p.variance > 0.0 ? p.mean * p.mean / p.variance : 1.0;
  const double scale0 = p.mean / shape0;
  auto mean_nll = [&p](std::span<const double> v) {
    const double shape = std::exp(v[0]);
    const double log_scale = v[1];
    const double scale = std::exp(log_scale);
    return -((shape - 1.0) * p.mean_log - p.mean / scale - shape * log_scale -
             std::lgamma(shape));
  };
  auto decode = [](std::span<const double> v) {
    return Distribution{Family::gamma, std::exp(v[0]), std::exp(v[1])};
  };
  return run_simplex(p, Family::gamma, mean_nll, {std::log(shape0), std::log(scale0)}, decode);
}

FitResult fit_weibull(const Prepared& p) {
  double ss = 0.0;
  for (double l : p.logs) ss += (l - p.mean_log) * (l - p.mean_log);
  const double sd_log = std::sqrt(ss / static_cast<double>(p.size()));
  // Var(ln X) = pi^2 / (6 c^2) for a Weibull variable.
  const double shape0 = sd_log > 0.0 ? std::numbers::pi / (sd_log * std::sqrt(6.0)) : 1.0;
  const double scale0 = std::exp(p.mean_log + std::numbers::egamma / shape0);

  auto mean_nll = [&p](std::span<const double> v) {
    const double shape = std::exp(v[0]);
    const double log_scale = v[1];
    double tail = 0.0;
    for (double l : p.logs) tail += std::exp(shape * (l - log_scale));
    tail /= static_cast<double>(p.size());
    return -(v[0] - shape * log_scale + (shape - 1.0) * p.mean_log - tail);
  };
  auto decode = [](std::span<const double> v) {
    return Distribution{Family::weibull_min, std::exp(v[0]), std::exp(v[1])};
  };
  return run_simplex(p, Family::weibull_min, mean_nll, {std::log(shape0), std::log(scale0)},
                     decode);
}

FitResult fit_pareto(const Prepared& p) {
  const double x_min = p.sorted.front();
  const double log_min = std::log(x_min);
  auto mean_nll = [&p, log_min](std::span<const double> v) {
    const double alpha = std::exp(v[0]);
    return -(v[0] + alpha * log_min - (alpha + 1.0) * p.mean_log);
  };
  auto decode = [x_min](std::span<const double> v) {
    return Distribution{Family::pareto, std::exp(v[0]), x_min};
  };
  return run_simplex(p, Family::pareto, mean_nll, {0.0}, decode);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::gamma: return "gamma";
    case Family::weibull_min: return "weibull-min";
    case Family::pareto: return "pareto";
    case Family::exponential: return "exponential";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kCandidateFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

double Distribution::cdf(double x) const {
  switch (family) {
    case Family::gamma:
      if (x <= 0.0) return 0.0;
      return boost::math::gamma_p(shape, x / scale, QuietPolicy());
    case Family::weibull_min:
      if (x <= 0.0) return 0.0;
      return -std::expm1(-std::pow(x / scale, shape));
    case Family::pareto:
      if (x <= scale) return 0.0;
      return -std::expm1(shape * std::log(scale / x));
    case Family::exponential:
      if (x <= 0.0) return 0.0;
      return -std::expm1(-x / scale);
  }
  return 0.0;
}

double Distribution::log_pdf(double x) const {
  switch (family) {
    case Family::gamma:
      if (x <= 0.0) return kNegInf;
      return (shape - 1.0) * std::log(x) - x / scale - shape * std::log(scale) -
             std::lgamma(shape);
    case Family::weibull_min: {
      if (x <= 0.0) return kNegInf;
      const double z = std::log(x / scale);
      return std::log(shape / scale) + (shape - 1.0) * z - std::exp(shape * z);
    }
    case Family::pareto:
      if (x < scale) return kNegInf;
      return std::log(shape) + shape * std::log(scale) - (shape + 1.0) * std::log(x);
    case Family::exponential:
      if (x < 0.0) return kNegInf;
      return -std::log(scale) - x / scale;
  }
  return kNegInf;
}

FitResult fit_mle(std::span<const double> samples, Family family) {
  const Prepared p = prepare(samples);
  switch (family) {
    case Family::gamma: return fit_gamma(p);
    case Family::weibull_min: return fit_weibull(p);
    case Family::pareto: return fit_pareto(p);
    case Family::exponential: return finish(p, Distribution{Family::exponential, 1.0, p.mean}, 0);
  }
  throw std::invalid_argument("unknown family");
}

BestFit best_fit(std::span<const double> samples) {
  BestFit out;
  for (Family f : kCandidateFamilies) {
    try {
      out.fits.push_back(fit_mle(samples, f));
    } catch (const FitError& e) {
      out.failures.emplace_back(f, e.what());
    }
  }
  if (out.fits.empty()) throw FitError("every candidate family failed to fit", std::nullopt);
  out.best = *std::ranges::min_element(
      out.fits, [](const FitResult& a, const FitResult& b) { return a.ks_statistic < b.ks_statistic; });
  return out;
}

}  // namespace lvq
