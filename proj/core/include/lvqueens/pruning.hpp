#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "lvqueens/board.hpp"

namespace lvq {

// Cells made unusable by a queen: its row, column and both diagonals, minus
// the queen's own cell, restricted to the board. Sorted row-major, no
// duplicates.
class AttackSet {
 public:
  AttackSet() = default;
  explicit AttackSet(std::vector<Position> cells);

  std::span<const Position> cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(Position p) const { return std::ranges::binary_search(cells_, p); }

  friend bool operator==(const AttackSet&, const AttackSet&) = default;

 private:
  std::vector<Position> cells_;
};

// Visits every cell attacked from q exactly once, without allocating.
// The four lines through q only intersect at q itself, so skipping q is
// enough to make the enumeration duplicate-free. Off-board diagonal cells are
// skipped while generating instead of being filtered afterwards.
// Precondition: on_board(n, q).
template <class Visit>
void for_each_invalid_point(BoardSize n, Position q, Visit&& visit) {
  const int size = n.value();
  const int i = q.row;
  const int j = q.col;
  for (int x = 0; x < size; ++x) {
    if (x != i) visit(Position{x, j});
    if (x != j) visit(Position{i, x});
    if (x == i) continue;
    const int anti = i + j - x;
    if (anti >= 0 && anti < size) visit(Position{x, anti});
    const int diag = x - i + j;
    if (diag >= 0 && diag < size) visit(Position{x, diag});
  }
}

// Throws std::out_of_range for an off-board queen.
AttackSet invalid_points(BoardSize n, Position q);

}  // namespace lvq
