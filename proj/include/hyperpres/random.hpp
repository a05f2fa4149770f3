#ifndef HYPERPRES_RANDOM_HPP
#define HYPERPRES_RANDOM_HPP

#include <cstdint>
#include <random>

#include "hyperpres/rational.hpp"

namespace hyperpres {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of sample `index` under `master`; a pure function so that samples can
/// be drawn in any order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// mt19937_64 with platform-independent range mapping (the std distributions
/// are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// u / v with u uniform in [lo, hi] and v uniform in [1, max_den].
  Rational ratio(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    const long u = static_cast<long>(uniform(lo, hi));
    return make_rational(u, static_cast<unsigned long>(uniform(1, max_den)));
  }

  /// bound * u / grid with u uniform in [-grid, grid].
  Rational in_range(const Rational& bound, std::int64_t grid) {
    return bound * make_rational(static_cast<long>(uniform(-grid, grid)), static_cast<unsigned long>(grid));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperpres

#endif  // HYPERPRES_RANDOM_HPP
