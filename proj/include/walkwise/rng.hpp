#pragma once

#include "walkwise/types.hpp"

#include <cstdint>
#include <random>

namespace walkwise {

/// Seeded generator with a fully specified bounded draw, so identical seeds
/// give identical sequences on every platform.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound) via rejection sampling; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() { return (engine_() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Random nonzero rational with numerator in +-1..7 and denominator in 1..7.
/// Small components keep exact-arithmetic entries from blowing up while
/// staying in general position.
inline Rational random_small_rational(DeterministicRng& rng) {
    const std::int64_t num = static_cast<std::int64_t>(rng.below(7)) + 1;
    const std::int64_t den = static_cast<std::int64_t>(rng.below(7)) + 1;
    const bool negative = rng.coin();
    return Rational(negative ? -num : num, den);
}

} // namespace walkwise
