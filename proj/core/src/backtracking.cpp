#include "lvqueens/backtracking.hpp"

#include <chrono>
#include <vector>

#include <fmt/format.h>

#include "lvqueens/errors.hpp"

namespace lvq {

BacktrackOutcome solve_backtracking(BoardSize n) {
  const int size = n.value();
  if (size == 2 || size == 3) {
    throw SolverError(fmt::format("no solution exists for n = {}", size));
  }
  const auto start = std::chrono::steady_clock::now();

  const auto diagonals = static_cast<std::size_t>(2 * size - 1);
  std::vector<char> col_used(static_cast<std::size_t>(size), 0);
  std::vector<char> sum_used(diagonals, 0);   // row + col
  std::vector<char> diff_used(diagonals, 0);  // row - col + size - 1
  std::vector<int> cols(static_cast<std::size_t>(size), -1);
  std::uint64_t tests = 0;

  auto occupy = [&](int row, int col, char value) {
    col_used[static_cast<std::size_t>(col)] = value;
    sum_used[static_cast<std::size_t>(row + col)] = value;
    diff_used[static_cast<std::size_t>(row - col + size - 1)] = value;
  };

  // Iterative DFS; cols[row] is the column currently held (or last tried).
  int row = 0;
  int next_col = 0;
  while (row < size) {
    bool placed = false;
    for (int col = next_col; col < size; ++col) {
      ++tests;
      if (!col_used[static_cast<std::size_t>(col)] &&
          !sum_used[static_cast<std::size_t>(row + col)] &&
          !diff_used[static_cast<std::size_t>(row - col + size - 1)]) {
        cols[static_cast<std::size_t>(row)] = col;
        occupy(row, col, 1);
        placed = true;
        break;
      }
    }
    if (placed) {
      ++row;
      next_col = 0;
      continue;
    }
    // Row exhausted.
    if (row == 0) throw SolverError(fmt::format("search space exhausted for n = {}", size));
    --row;
    const int prev = cols[static_cast<std::size_t>(row)];
    occupy(row, prev, 0);
    next_col = prev + 1;
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  return BacktrackOutcome{
      .n = n,
      .solution = Solution::from_columns(cols),
      .candidate_tests = tests,
      .duration_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count(),
  };
}

}  // namespace lvq
