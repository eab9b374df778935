#pragma once

#include <cstdint>
#include <random>

namespace toda {

// Deterministic RNG for the identity suites. mt19937_64 output is pinned by the
// standard; the uniform mappings below avoid std::uniform_real_distribution,
// whose output is implementation-defined, so seeded runs are reproducible
// across compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // in [0, n)
  std::uint64_t index(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace toda
