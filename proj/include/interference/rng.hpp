#pragma once

#include <cstdint>
#include <random>

namespace interference {

/// Deterministic random source. Every stochastic operation in the library
/// takes an explicit seed and builds one of these; there is no ambient RNG.
/// Doubles are produced from raw 64-bit draws with fixed bit arithmetic, so
/// streams are bit-identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound); rejection sampling, unbiased.
    std::uint64_t integer(std::uint64_t bound);

    /// Standard normal via Box-Muller on raw bits (spare value cached).
    double gaussian();

  private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace interference
