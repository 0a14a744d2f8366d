#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lvq {

struct SimplexOptions {
  std::size_t max_iterations = 4000;
  // Converged when the spread of f over the simplex is at most
  // f_tolerance * (1 + |f_best|) and every vertex is within x_tolerance of the
  // best one in each coordinate.
  double f_tolerance = 1e-12;
  double x_tolerance = 1e-9;
  // Offset of the initial vertices from x0, per coordinate.
  double initial_step = 0.1;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Nelder-Mead minimisation (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2). Non-finite objective values are treated as +infinity.
SimplexResult minimize_simplex(const std::function<double(std::span<const double>)>& f,
                               std::vector<double> x0, const SimplexOptions& options = {});

}  // namespace lvq
