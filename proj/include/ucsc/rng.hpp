#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace ucsc {

// One splitmix64 step. Used to decorrelate seeds before they reach an engine.
inline std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for run `index` of an experiment with the given master seed:
/// mix_seed(master_seed XOR (index+1)*2^64/phi). Replay any single run by
/// passing the derived value as the seed of a one-run experiment.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t index) {
  return mix_seed(master_seed ^ ((index + 1) * 0x9e3779b97f4a7c15ULL));
}

/// Deterministic random stream: mt19937_64 (whose output sequence the
/// standard pins down) plus hand-rolled draws, so identical seeds give
/// identical streams on every platform. std::uniform_real_distribution and
/// std::normal_distribution make no such guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi); returns lo when the interval is degenerate.
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Unbiased integer in [0, n), rejection sampled.
  std::size_t index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::index: n must be positive");
    const std::uint64_t span = n;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % span);
  }

  /// Standard normal draw (Marsaglia polar). The pair's second value is
  /// discarded so each call consumes a position-independent slice of the
  /// stream.
  double gaussian() {
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return u * std::sqrt(-2.0 * std::log(s) / s);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ucsc
