#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace lvq {

// SplitMix64 step. Used for seed derivation, not for sampling.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Order-sensitive 64-bit hash of a tuple of words.
constexpr std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t state = 0x6a09e667f3bcc908ULL;
  std::uint64_t h = 0;
  for (std::uint64_t w : words) {
    state ^= w;
    h = splitmix64(state) ^ (h * 0x9e3779b97f4a7c15ULL);
  }
  return h;
}

// Seeded 64-bit generator. mt19937_64's output sequence is fixed by the
// standard and the bounded draw below is our own, so a (seed, call sequence)
// pair gives the same numbers on every conforming toolchain, unlike
// std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). Lemire's multiply-and-reject.
  // Precondition: bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lvq
