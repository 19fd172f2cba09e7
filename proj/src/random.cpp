#include "qseal/random.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qseal {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RandomSource::RandomSource(std::uint64_t seed) : key_(seed), engine_(splitmix64(seed)) {}

RandomSource RandomSource::child(std::uint64_t index) const {
  return RandomSource(splitmix64(key_ ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= limit) return x % bound;
  }
}

double RandomSource::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomSource::normal() {
  double u1 = unit();
  while (u1 <= 0.0) u1 = unit();
  const double u2 = unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t count,
                                                    RandomSource& rng) {
  if (count > population) throw std::invalid_argument("sample larger than population");
  std::vector<std::size_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(population - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace qseal
