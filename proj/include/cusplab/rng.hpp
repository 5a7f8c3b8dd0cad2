#pragma once

#include <cstdint>

namespace cusplab {

/// splitmix64 generator. Reports must be byte-identical for a given seed,
/// so randomness never goes through implementation-defined std distributions.
class rng {
public:
    explicit rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64()
    {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    uint64_t state_;
};

} // namespace cusplab
