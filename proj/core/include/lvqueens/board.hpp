#pragma once

// Board geometry and a brute-force attack oracle. Nothing in here is shared
// with the solvers, so it can be used to check either of them.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lvq {

// Board dimension (and queen count). Always >= 1.
class BoardSize {
 public:
  explicit BoardSize(int n);

  int value() const noexcept { return n_; }
  int cells() const noexcept { return n_ * n_; }

  friend bool operator==(BoardSize, BoardSize) = default;

 private:
  int n_;
};

// A cell, row-major with (0, 0) in the top-left corner.
struct Position {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(Position p);

inline bool on_board(BoardSize n, Position p) noexcept {
  return p.row >= 0 && p.col >= 0 && p.row < n.value() && p.col < n.value();
}

// True iff a and b share a row, column, diagonal or anti-diagonal.
// Precondition: a != b.
bool attacks(Position a, Position b) noexcept;

// A placement of queens on an n x n board. The solvers only ever hand out
// placements that pass verify_solution(); the type itself does not enforce it
// so that the oracle can be pointed at arbitrary input.
class Solution {
 public:
  Solution(BoardSize n, std::vector<Position> queens);

  // Builds the placement with one queen per row: queen r is (r, columns[r]).
  static Solution from_columns(std::span<const int> columns);

  BoardSize size() const noexcept { return n_; }
  std::span<const Position> queens() const noexcept { return queens_; }

  // Column of the queen in each row, row ascending. Empty if some row does not
  // hold exactly one queen.
  std::vector<int> columns_by_row() const;

  // Stable 64-bit FNV-1a digest of columns_by_row().
  std::uint64_t hash() const;

 private:
  BoardSize n_;
  std::vector<Position> queens_;
};

struct Verdict {
  bool ok = false;
  std::string reason;
  // First conflicting pair in placement order, when the failure is an attack.
  std::optional<std::pair<Position, Position>> conflict;

  explicit operator bool() const noexcept { return ok; }
};

// Pairwise O(n^2) check: exactly n on-board, distinct, mutually non-attacking
// queens.
Verdict verify_solution(const Solution& s);

// { p != q : attacks(q, p) } by scanning all n^2 cells. Row-major order.
std::vector<Position> brute_force_attacked_set(BoardSize n, Position q);

// Renders '.' for empty cells and 'Q' for queens, one line per row.
std::string render(const Solution& s);

}  // namespace lvq
