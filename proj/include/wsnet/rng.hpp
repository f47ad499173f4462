#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace wsnet {

// Seeded random stream used by every sampling routine.
//
// std::mt19937_64 produces the same raw sequence on every conforming
// implementation, but the standard distribution adaptors do not, so the
// helpers below derive bounded draws directly from raw engine output.
// A given seed therefore reproduces a run bit for bit across platforms.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased integer in [0, bound) by rejection. bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound) {
        assert(bound > 0);
        // Reject raw values below 2^64 mod bound; what remains splits into
        // equal-sized classes, so the modulo is exact.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold)
                return r % bound;
        }
    }

    // Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace wsnet
