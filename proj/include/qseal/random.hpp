#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace qseal {

// Seeded randomness for every stochastic operation in the library.
//
// Streams are derived, never shared: `child(i)` depends only on the key of
// the parent and `i`, not on how many values the parent has produced. Monte
// Carlo trial `i` therefore sees the same stream regardless of scheduling or
// thread count.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return key_; }

  RandomSource child(std::uint64_t index) const;

  std::uint64_t next_u64() { return engine_(); }
  unsigned bit() { return static_cast<unsigned>(engine_() >> 63); }
  // Uniform on [0, bound); bound must be nonzero. Rejection sampling keeps the
  // result free of modulo bias and independent of the standard library's
  // distribution implementations.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1) with 53 random bits.
  double unit();
  // Standard normal via Box-Muller.
  double normal();

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// `count` distinct indices from [0, population), uniformly, in draw order
// (partial Fisher-Yates).
std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t count,
                                                    RandomSource& rng);

}  // namespace qseal
