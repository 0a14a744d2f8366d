#include "lvqueens/pruning.hpp"

#include <stdexcept>

namespace lvq {

AttackSet::AttackSet(std::vector<Position> cells) : cells_(std::move(cells)) {
  std::ranges::sort(cells_);
  const auto dup = std::ranges::unique(cells_);
  cells_.erase(dup.begin(), dup.end());
}

AttackSet invalid_points(BoardSize n, Position q) {
  if (!on_board(n, q)) throw std::out_of_range("queen off board at " + to_string(q));
  std::vector<Position> cells;
  cells.reserve(static_cast<std::size_t>(4 * (n.value() - 1)));
  for_each_invalid_point(n, q, [&cells](Position p) { cells.push_back(p); });
  return AttackSet(std::move(cells));
}

}  // namespace lvq
