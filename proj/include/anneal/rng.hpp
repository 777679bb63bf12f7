#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace anneal {

/// Deterministic random stream used by every stochastic component.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard,
/// so runs are reproducible across platforms) and derives doubles directly
/// from the raw 64-bit output instead of going through the distribution
/// classes in <random>, whose results are implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform_pos() { return 1.0 - uniform(); }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double gaussian()
    {
        double const r = std::sqrt(-2.0 * std::log(uniform_pos()));
        double const a = 6.283185307179586476925286766559 * uniform();
        return r * std::cos(a);
    }

    std::uint64_t bits() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace anneal
