#include "lvqueens/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lvq {

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

}  // namespace

SimplexResult minimize_simplex(const std::function<double(std::span<const double>)>& f,
                               std::vector<double> x0, const SimplexOptions& options) {
  if (x0.empty()) throw std::invalid_argument("simplex needs at least one dimension");
  const std::size_t dim = x0.size();

  auto eval = [&f](const std::vector<double>& x) {
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  std::vector<Vertex> simplex;
  simplex.reserve(dim + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<double> x = x0;
    x[d] += options.initial_step;
    simplex.push_back({x, eval(x)});
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  auto blend = [dim](const std::vector<double>& from, const std::vector<double>& to, double t) {
    std::vector<double> out(dim);
    for (std::size_t d = 0; d < dim; ++d) out[d] = from[d] + t * (to[d] - from[d]);
    return out;
  };

  SimplexResult result;
  result.iterations = options.max_iterations;
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    std::ranges::stable_sort(simplex, by_value);

    const Vertex& best = simplex.front();
    const Vertex& worst = simplex.back();
    double x_spread = 0.0;
    for (std::size_t v = 1; v <= dim; ++v) {
      for (std::size_t d = 0; d < dim; ++d) {
        x_spread = std::max(x_spread, std::abs(simplex[v].x[d] - best.x[d]));
      }
    }
    if (std::isfinite(worst.f) &&
        worst.f - best.f <= options.f_tolerance * (1.0 + std::abs(best.f)) &&
        x_spread <= options.x_tolerance) {
      result.converged = true;
      result.iterations = iter;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[v].x[d];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const std::vector<double> reflected = blend(centroid, worst.x, -1.0);
    const double f_reflected = eval(reflected);

    if (f_reflected < best.f) {
      std::vector<double> expanded = blend(centroid, worst.x, -2.0);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex.back() = {std::move(expanded), f_expanded};
      } else {
        simplex.back() = {reflected, f_reflected};
      }
      continue;
    }
    if (f_reflected < simplex[dim - 1].f) {
      simplex.back() = {reflected, f_reflected};
      continue;
    }

    // Contract towards the better of the worst point and its reflection.
    const bool outside = f_reflected < worst.f;
    std::vector<double> contracted =
        outside ? blend(centroid, reflected, 0.5) : blend(centroid, worst.x, 0.5);
    const double f_contracted = eval(contracted);
    if (f_contracted < std::min(f_reflected, worst.f)) {
      simplex.back() = {std::move(contracted), f_contracted};
      continue;
    }

    for (std::size_t v = 1; v <= dim; ++v) {
      simplex[v].x = blend(simplex.front().x, simplex[v].x, 0.5);
      simplex[v].f = eval(simplex[v].x);
    }
  }

  std::ranges::stable_sort(simplex, by_value);
  result.x = simplex.front().x;
  result.value = simplex.front().f;
  return result;
}

}  // namespace lvq
