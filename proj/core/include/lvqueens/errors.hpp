#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lvq {

// Root of every exception thrown by the library. Precondition violations on
// arguments (off-board positions, empty samples) use std::invalid_argument /
// std::out_of_range instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver refused to run or could not finish (e.g. n = 2).
class SolverError : public Error {
 public:
  using Error::Error;
};

// The Las Vegas loop hit its configured attempts budget before succeeding.
class BudgetExhausted : public SolverError {
 public:
  BudgetExhausted(std::uint64_t attempts, std::uint64_t restarts)
      : SolverError("attempts budget exhausted after " +
                    std::to_string(attempts) + " placements"),
        attempts_(attempts),
        restarts_(restarts) {}

  std::uint64_t attempts() const noexcept { return attempts_; }
  std::uint64_t restarts() const noexcept { return restarts_; }

 private:
  std::uint64_t attempts_;
  std::uint64_t restarts_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lvq
