#pragma once

#include <cstdint>

#include "lvqueens/board.hpp"

namespace lvq {

struct BacktrackOutcome {
  BoardSize n;
  Solution solution;
  // Every (row, col) safety check, whether it passed or not.
  std::uint64_t candidate_tests = 0;
  std::int64_t duration_ns = 0;
};

// Naive first-solution backtracking: one queen per row, rows top to bottom,
// columns left to right, no look-ahead and no value ordering. The returned
// solution is the lexicographically smallest column vector.
// Throws SolverError for n = 2 or 3.
BacktrackOutcome solve_backtracking(BoardSize n);

}  // namespace lvq
