#pragma once

#include <cstdint>
#include <random>

namespace stabledeg {

// Seeded source used by every randomized path. Bounded draws use plain
// rejection on the raw 64-bit engine output, so a seed yields the same stream
// on every standard library (std::uniform_int_distribution does not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = engine_();
    while (x < threshold) x = engine_();
    return x % bound;
  }

  // Derive an independent child stream, e.g. one per trial.
  Rng fork() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace stabledeg
