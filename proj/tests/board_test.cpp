#include <set>

#include "doctest.h"
#include "lvqueens/board.hpp"
#include "test_support.hpp"

using lvq::BoardSize;
using lvq::Position;
using lvq::Solution;

TEST_CASE("attacks: rows, columns and diagonals") {
  CHECK(lvq::attacks({1, 0}, {1, 3}));
  CHECK_FALSE(lvq::attacks({0, 0}, {1, 2}));
  CHECK(lvq::attacks({0, 2}, {2, 0}));
  CHECK(lvq::attacks({0, 0}, {3, 3}));
  CHECK(lvq::attacks({2, 5}, {7, 5}));
}

TEST_CASE("attacks is symmetric") {
  const int n = 6;
  for (int a = 0; a < n * n; ++a) {
    for (int b = 0; b < n * n; ++b) {
      if (a == b) continue;
      const Position pa{a / n, a % n};
      const Position pb{b / n, b % n};
      REQUIRE(lvq::attacks(pa, pb) == lvq::attacks(pb, pa));
    }
  }
}

TEST_CASE("BoardSize rejects non-positive sizes") {
  CHECK_THROWS_AS(BoardSize(0), std::invalid_argument);
  CHECK_THROWS_AS(BoardSize(-3), std::invalid_argument);
  CHECK(BoardSize(2).cells() == 4);
}

TEST_CASE("verify_solution") {
  SUBCASE("4x4 solution") {
    const Solution s(BoardSize(4), {{0, 2}, {1, 0}, {2, 3}, {3, 1}});
    CHECK(lvq::verify_solution(s).ok);
  }
  SUBCASE("single queen") { CHECK(lvq::verify_solution(Solution(BoardSize(1), {{0, 0}})).ok); }
  SUBCASE("main diagonal reports the conflicting pair") {
    const Solution s(BoardSize(4), {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    const lvq::Verdict v = lvq::verify_solution(s);
    CHECK_FALSE(v.ok);
    REQUIRE(v.conflict.has_value());
    CHECK(v.conflict->first == Position{0, 0});
    CHECK(v.conflict->second == Position{1, 1});
  }
  SUBCASE("wrong queen count") {
    const lvq::Verdict v = lvq::verify_solution(Solution(BoardSize(4), {{0, 1}, {1, 3}}));
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.conflict.has_value());
  }
  SUBCASE("off-board queen") {
    CHECK_FALSE(lvq::verify_solution(Solution(BoardSize(1), {{0, 1}})).ok);
  }
  SUBCASE("duplicate queens") {
    CHECK_FALSE(lvq::verify_solution(Solution(BoardSize(2), {{0, 0}, {0, 0}})).ok);
  }
}

TEST_CASE("n = 2 and n = 3 have no solutions according to the oracle") {
  for (int n : {2, 3}) {
    CHECK(lvq::testing::all_solutions(n).empty());
  }
  CHECK(lvq::testing::all_solutions(4).size() == 2);
  CHECK(lvq::testing::all_solutions(8).size() == 92);
}

TEST_CASE("verify_solution is invariant under the board symmetries") {
  std::vector<Solution> boards;
  for (int n : {4, 5, 6, 8}) {
    for (const auto& cols : lvq::testing::all_solutions(n)) boards.push_back(Solution::from_columns(cols));
  }
  boards.emplace_back(BoardSize(4), std::vector<Position>{{0, 0}, {1, 2}, {2, 1}, {3, 3}});
  boards.emplace_back(BoardSize(5), std::vector<Position>{{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 4}});
  for (const Solution& s : boards) {
    const bool expected = lvq::verify_solution(s).ok;
    for (int t = 0; t < 8; ++t) {
      REQUIRE(lvq::verify_solution(lvq::testing::transform(t, s)).ok == expected);
    }
  }
}

TEST_CASE("brute_force_attacked_set") {
  SUBCASE("queen at (1,0) on 4x4") {
    const std::vector<Position> expect{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3},
                                       {2, 0}, {2, 1}, {3, 0}, {3, 2}};
    CHECK(lvq::brute_force_attacked_set(BoardSize(4), {1, 0}) == expect);
  }
  SUBCASE("1x1 board") { CHECK(lvq::brute_force_attacked_set(BoardSize(1), {0, 0}).empty()); }
  SUBCASE("centre of 8x8") {
    CHECK(lvq::brute_force_attacked_set(BoardSize(8), {3, 3}).size() == 27);
  }
  SUBCASE("off-board queen throws") {
    CHECK_THROWS_AS(lvq::brute_force_attacked_set(BoardSize(4), {4, 0}), std::out_of_range);
  }
}

TEST_CASE("attacked-set cardinality matches the line-length formula") {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const int m = n - 1;
        const int diag = std::min(r, c) + std::min(m - r, m - c);
        const int anti = std::min(r, m - c) + std::min(m - r, c);
        const auto size = lvq::brute_force_attacked_set(BoardSize(n), {r, c}).size();
        REQUIRE(size == static_cast<std::size_t>(2 * m + diag + anti));
        const bool corner = (r == 0 || r == m) && (c == 0 || c == m);
        if (corner) REQUIRE(size == static_cast<std::size_t>(3 * m));
      }
    }
  }
}

TEST_CASE("Solution helpers") {
  const Solution s = Solution::from_columns(std::vector<int>{1, 3, 0, 2});
  CHECK(s.columns_by_row() == std::vector<int>{1, 3, 0, 2});
  CHECK(lvq::render(s) == ".Q..\n...Q\nQ...\n..Q.\n");

  const Solution shuffled(BoardSize(4), {{2, 0}, {0, 1}, {3, 2}, {1, 3}});
  CHECK(shuffled.columns_by_row() == s.columns_by_row());
  CHECK(shuffled.hash() == s.hash());

  const Solution other = Solution::from_columns(std::vector<int>{2, 0, 3, 1});
  CHECK(other.hash() != s.hash());

  const Solution two_in_a_row(BoardSize(2), {{0, 0}, {0, 1}});
  CHECK(two_in_a_row.columns_by_row().empty());
}
