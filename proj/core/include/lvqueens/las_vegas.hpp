#pragma once

// Randomized queen placement with forward pruning and full restart on dead
// ends.
//
// A pass starts from an empty board where every cell is valid. Each step picks
// a uniformly random cell from the remaining valid space, places a queen
// there, and strikes the queen's row, column and diagonals from the valid
// space. When the valid space runs dry the pass is over: with n queens down
// the board is solved, otherwise the whole board is thrown away and a new pass
// begins. Every placement counts as one attempt, across all passes.

#include <chrono>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lvqueens/board.hpp"
#include "lvqueens/errors.hpp"
#include "lvqueens/pruning.hpp"
#include "lvqueens/rng.hpp"

namespace lvq {

using FlatIndex = std::uint32_t;

inline FlatIndex to_flat(BoardSize n, Position p) noexcept {
  return static_cast<FlatIndex>(p.row * n.value() + p.col);
}

inline Position to_position(BoardSize n, FlatIndex k) noexcept {
  const auto size = static_cast<FlatIndex>(n.value());
  return {static_cast<int>(k / size), static_cast<int>(k % size)};
}

// Working state of one pass. The validity mask and the valid-space list are
// kept in lockstep: the list backs O(1) uniform sampling and removal
// (swap-remove through a slot table); the mask mirrors the board picture, with
// struck cells at 0 and queen cells left at 1.
class BoardState {
 public:
  explicit BoardState(BoardSize n);

  // Back to an empty board with every cell valid.
  void reset();

  BoardSize size() const noexcept { return n_; }

  // Unordered. Order depends on the removal history.
  std::span<const FlatIndex> valid_space() const noexcept { return valid_space_; }
  bool in_valid_space(FlatIndex k) const noexcept {
    return k < slot_.size() && slot_[k] != kAbsent;
  }
  bool valid_cell(Position p) const noexcept {
    return validity_[to_flat(n_, p)] != 0;
  }
  std::span<const Position> queens() const noexcept { return queens_; }

  // Puts a queen on cell k and strikes every cell it attacks.
  // Throws std::invalid_argument when k is not in the valid space.
  void place_queen(FlatIndex k);

 private:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;

  void strike(FlatIndex k) noexcept;

  BoardSize n_;
  std::vector<std::uint8_t> validity_;
  std::vector<FlatIndex> valid_space_;
  std::vector<std::uint32_t> slot_;
  std::vector<Position> queens_;
};

// Recomputes the valid space from scratch with the board oracle and compares:
// the list must be exactly the unoccupied cells no queen attacks, and the mask
// must agree with it.
bool audit_invariant(const BoardState& state);

struct TrialOutcome {
  BoardSize n;
  Solution solution;
  std::uint64_t attempts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t seed = 0;
  std::int64_t duration_ns = 0;
};

struct LasVegasOptions {
  // Abort with BudgetExhausted instead of placing attempt number budget + 1.
  std::optional<std::uint64_t> attempts_budget;
  // Called after every placement, before the dead-end check.
  std::function<void(const BoardState&)> on_placement;
};

// Chooses one entry of the current valid space; returns its position in the
// span.
template <class P>
concept CellPicker = requires(P& picker, std::span<const FlatIndex> candidates) {
  { picker.pick(candidates) } -> std::convertible_to<std::size_t>;
};

class UniformPicker {
 public:
  explicit UniformPicker(std::uint64_t seed) : rng_(seed) {}

  std::size_t pick(std::span<const FlatIndex> candidates) {
    return static_cast<std::size_t>(rng_.below(candidates.size()));
  }

 private:
  Rng rng_;
};

// Replays a fixed list of cells, for reproducing hand-worked examples.
class ScriptedPicker {
 public:
  explicit ScriptedPicker(std::vector<Position> script, BoardSize n);

  std::size_t pick(std::span<const FlatIndex> candidates);
  bool exhausted() const noexcept { return next_ == script_.size(); }

 private:
  std::vector<FlatIndex> script_;
  std::size_t next_ = 0;
};

namespace detail {
void require_solvable(BoardSize n);
}  // namespace detail

template <CellPicker P>
TrialOutcome las_vegas(BoardSize n, P& picker, const LasVegasOptions& options = {}) {
  detail::require_solvable(n);
  const auto start = std::chrono::steady_clock::now();
  const auto queens_needed = static_cast<std::size_t>(n.value());

  BoardState state(n);
  std::uint64_t attempts = 0;
  std::uint64_t restarts = 0;
  for (;;) {
    if (options.attempts_budget && attempts >= *options.attempts_budget) {
      throw BudgetExhausted(attempts, restarts);
    }
    const auto candidates = state.valid_space();
    const std::size_t slot = picker.pick(candidates);
    if (slot >= candidates.size()) throw std::logic_error("picker returned out-of-range slot");
    state.place_queen(candidates[slot]);
    ++attempts;
    if (options.on_placement) options.on_placement(state);

    if (state.queens().size() == queens_needed) {
      // One queen per row now, so every cell shares a row with some queen.
      if (!state.valid_space().empty()) {
        throw std::logic_error("valid space not empty after placing n queens");
      }
      break;
    }
    if (state.valid_space().empty()) {
      ++restarts;
      state.reset();
    }
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  const auto queens = state.queens();
  return TrialOutcome{
      .n = n,
      .solution = Solution(n, std::vector<Position>(queens.begin(), queens.end())),
      .attempts = attempts,
      .restarts = restarts,
      .seed = 0,
      .duration_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count(),
  };
}

// Uniform picks from Rng(seed). Same (n, seed) gives the same outcome, apart
// from duration_ns.
TrialOutcome las_vegas(BoardSize n, std::uint64_t seed, const LasVegasOptions& options = {});

}  // namespace lvq
