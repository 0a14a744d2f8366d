#include "doctest.h"
#include "lvqueens/backtracking.hpp"
#include "lvqueens/errors.hpp"
#include "test_support.hpp"

using lvq::BoardSize;

namespace {

// Direct recursive transcription of the counting rule: every (row, col)
// examined is one test, pass or fail. O(n) safety check against the partial
// column vector, nothing shared with the solver.
bool count_recursive(int n, std::vector<int>& cols, std::uint64_t& tests) {
  const int row = static_cast<int>(cols.size());
  if (row == n) return true;
  for (int c = 0; c < n; ++c) {
    ++tests;
    bool safe = true;
    for (int r = 0; r < row && safe; ++r) {
      safe = cols[static_cast<std::size_t>(r)] != c &&
             std::abs(cols[static_cast<std::size_t>(r)] - c) != row - r;
    }
    if (!safe) continue;
    cols.push_back(c);
    if (count_recursive(n, cols, tests)) return true;
    cols.pop_back();
  }
  return false;
}

}  // namespace

TEST_CASE("solve_backtracking small boards") {
  const auto four = lvq::solve_backtracking(BoardSize(4));
  CHECK(four.solution.columns_by_row() == std::vector<int>{1, 3, 0, 2});
  CHECK(four.candidate_tests == 26);

  CHECK(lvq::solve_backtracking(BoardSize(5)).candidate_tests == 15);

  const auto one = lvq::solve_backtracking(BoardSize(1));
  CHECK(one.candidate_tests == 1);
  CHECK(one.solution.columns_by_row() == std::vector<int>{0});
}

TEST_CASE("solve_backtracking candidate-test counts for n = 4..14") {
  const std::vector<std::uint64_t> expected{26, 15, 171, 42, 876, 333, 975, 517, 3066, 1365, 26495};
  for (int n = 4; n <= 14; ++n) {
    CAPTURE(n);
    const auto r = lvq::solve_backtracking(BoardSize(n));
    CHECK(r.candidate_tests == expected[static_cast<std::size_t>(n - 4)]);
    CHECK(lvq::verify_solution(r.solution).ok);
  }
}

TEST_CASE("solve_backtracking agrees with a naive recursive count") {
  for (int n : {1, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16}) {
    CAPTURE(n);
    std::vector<int> cols;
    std::uint64_t tests = 0;
    REQUIRE(count_recursive(n, cols, tests));
    const auto r = lvq::solve_backtracking(BoardSize(n));
    CHECK(r.candidate_tests == tests);
    CHECK(r.solution.columns_by_row() == cols);
  }
}

TEST_CASE("solve_backtracking returns the lexicographically smallest solution") {
  for (int n = 4; n <= 8; ++n) {
    const auto all = lvq::testing::all_solutions(n);
    REQUIRE_FALSE(all.empty());
    CHECK(lvq::solve_backtracking(BoardSize(n)).solution.columns_by_row() == all.front());
  }
}

TEST_CASE("solve_backtracking is deterministic") {
  const auto a = lvq::solve_backtracking(BoardSize(12));
  const auto b = lvq::solve_backtracking(BoardSize(12));
  CHECK(a.candidate_tests == b.candidate_tests);
  CHECK(a.solution.columns_by_row() == b.solution.columns_by_row());
  CHECK(a.candidate_tests >= 12);
}

TEST_CASE("solve_backtracking rejects unsolvable sizes") {
  CHECK_THROWS_AS(lvq::solve_backtracking(BoardSize(2)), lvq::SolverError);
  CHECK_THROWS_AS(lvq::solve_backtracking(BoardSize(3)), lvq::SolverError);
}
