#include "lvqueens/las_vegas.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace lvq {

BoardState::BoardState(BoardSize n)
    : n_(n),
      validity_(static_cast<std::size_t>(n.cells())),
      valid_space_(static_cast<std::size_t>(n.cells())),
      slot_(static_cast<std::size_t>(n.cells())) {
  queens_.reserve(static_cast<std::size_t>(n.value()));
  reset();
}

void BoardState::reset() {
  std::ranges::fill(validity_, std::uint8_t{1});
  valid_space_.resize(validity_.size());
  std::iota(valid_space_.begin(), valid_space_.end(), FlatIndex{0});
  std::iota(slot_.begin(), slot_.end(), std::uint32_t{0});
  queens_.clear();
}

void BoardState::strike(FlatIndex k) noexcept {
  const std::uint32_t slot = slot_[k];
  if (slot == kAbsent) return;
  const FlatIndex last = valid_space_.back();
  valid_space_[slot] = last;
  slot_[last] = slot;
  valid_space_.pop_back();
  slot_[k] = kAbsent;
}

void BoardState::place_queen(FlatIndex k) {
  if (!in_valid_space(k)) {
    throw std::invalid_argument(fmt::format("cell {} is not in the valid space", k));
  }
  const Position q = to_position(n_, k);
  strike(k);
  queens_.push_back(q);
  for_each_invalid_point(n_, q, [this](Position p) {
    const FlatIndex cell = to_flat(n_, p);
    validity_[cell] = 0;
    strike(cell);
  });
}

bool audit_invariant(const BoardState& state) {
  const BoardSize n = state.size();
  const auto queens = state.queens();

  std::vector<FlatIndex> expected;
  for (int r = 0; r < n.value(); ++r) {
    for (int c = 0; c < n.value(); ++c) {
      const Position p{r, c};
      const bool occupied = std::ranges::find(queens, p) != queens.end();
      const bool attacked = std::ranges::any_of(
          queens, [p](const Position& q) { return q != p && attacks(q, p); });
      if (occupied) {
        if (!state.valid_cell(p) || state.in_valid_space(to_flat(n, p))) return false;
        continue;
      }
      if (state.valid_cell(p) == attacked) return false;
      if (!attacked) expected.push_back(to_flat(n, p));
    }
  }

  std::vector<FlatIndex> actual(state.valid_space().begin(), state.valid_space().end());
  std::ranges::sort(actual);
  if (actual != expected) return false;
  return std::ranges::all_of(actual, [&](FlatIndex k) { return state.in_valid_space(k); });
}

ScriptedPicker::ScriptedPicker(std::vector<Position> script, BoardSize n) {
  script_.reserve(script.size());
  for (const Position& p : script) {
    if (!on_board(n, p)) throw std::out_of_range("scripted cell off board at " + to_string(p));
    script_.push_back(to_flat(n, p));
  }
}

std::size_t ScriptedPicker::pick(std::span<const FlatIndex> candidates) {
  if (exhausted()) throw std::logic_error("scripted picker ran out of cells");
  const FlatIndex want = script_[next_++];
  const auto it = std::ranges::find(candidates, want);
  if (it == candidates.end()) {
    throw std::logic_error(fmt::format("scripted cell {} is not in the valid space", want));
  }
  return static_cast<std::size_t>(it - candidates.begin());
}

namespace detail {

void require_solvable(BoardSize n) {
  if (n.value() == 2 || n.value() == 3) {
    throw SolverError(fmt::format("no solution exists for n = {}", n.value()));
  }
}

}  // namespace detail

TrialOutcome las_vegas(BoardSize n, std::uint64_t seed, const LasVegasOptions& options) {
  UniformPicker picker(seed);
  TrialOutcome out = las_vegas(n, picker, options);
  out.seed = seed;
  return out;
}

}  // namespace lvq
