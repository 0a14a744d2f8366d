#include "lvqueens/board.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace lvq {

BoardSize::BoardSize(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument(fmt::format("board size must be >= 1, got {}", n));
  }
}

std::string to_string(Position p) { return fmt::format("({},{})", p.row, p.col); }

bool attacks(Position a, Position b) noexcept {
  return a.row == b.row || a.col == b.col || a.row + a.col == b.row + b.col ||
         a.row - a.col == b.row - b.col;
}

Solution::Solution(BoardSize n, std::vector<Position> queens)
    : n_(n), queens_(std::move(queens)) {}

Solution Solution::from_columns(std::span<const int> columns) {
  std::vector<Position> queens;
  queens.reserve(columns.size());
  for (std::size_t r = 0; r < columns.size(); ++r) {
    queens.push_back({static_cast<int>(r), columns[r]});
  }
  return Solution(BoardSize(static_cast<int>(columns.size())), std::move(queens));
}

std::vector<int> Solution::columns_by_row() const {
  const int n = n_.value();
  std::vector<int> cols(static_cast<std::size_t>(n), -1);
  for (const Position& q : queens_) {
    if (!on_board(n_, q) || cols[static_cast<std::size_t>(q.row)] != -1) return {};
    cols[static_cast<std::size_t>(q.row)] = q.col;
  }
  if (std::ranges::find(cols, -1) != cols.end()) return {};
  return cols;
}

std::uint64_t Solution::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint32_t v) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint32_t>(n_.value()));
  for (int c : columns_by_row()) mix(static_cast<std::uint32_t>(c));
  return h;
}

Verdict verify_solution(const Solution& s) {
  const BoardSize n = s.size();
  const auto queens = s.queens();
  if (queens.size() != static_cast<std::size_t>(n.value())) {
    return {false, fmt::format("expected {} queens, found {}", n.value(), queens.size()), {}};
  }
  for (const Position& q : queens) {
    if (!on_board(n, q)) return {false, "queen off board at " + to_string(q), {}};
  }
  for (std::size_t a = 0; a < queens.size(); ++a) {
    for (std::size_t b = a + 1; b < queens.size(); ++b) {
      if (queens[a] == queens[b]) {
        return {false, "two queens on " + to_string(queens[a]), std::pair{queens[a], queens[b]}};
      }
      if (attacks(queens[a], queens[b])) {
        return {false, to_string(queens[a]) + " attacks " + to_string(queens[b]),
                std::pair{queens[a], queens[b]}};
      }
    }
  }
  return {true, {}, {}};
}

std::vector<Position> brute_force_attacked_set(BoardSize n, Position q) {
  if (!on_board(n, q)) throw std::out_of_range("queen off board at " + to_string(q));
  std::vector<Position> out;
  for (int r = 0; r < n.value(); ++r) {
    for (int c = 0; c < n.value(); ++c) {
      const Position p{r, c};
      if (p != q && attacks(q, p)) out.push_back(p);
    }
  }
  return out;
}

std::string render(const Solution& s) {
  const int n = s.size().value();
  std::string grid(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1), '.');
  for (int r = 0; r < n; ++r) grid[static_cast<std::size_t>(r * (n + 1) + n)] = '\n';
  for (const Position& q : s.queens()) {
    if (on_board(s.size(), q)) grid[static_cast<std::size_t>(q.row * (n + 1) + q.col)] = 'Q';
  }
  return grid;
}

}  // namespace lvq
