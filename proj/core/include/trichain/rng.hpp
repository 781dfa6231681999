#pragma once

#include <cstdint>

namespace trichain {

/// Deterministic 64-bit generator (xoshiro256** seeded through splitmix64).
///
/// Every randomized operation in the library draws exclusively through this
/// class, so a (seed, config, start graph) triple fixes the whole run.  The
/// draw order of each chain step is documented at the step function.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = split_mix(x);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Unbiased draw from {0, ..., bound-1} via bitmask rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t mask = mask_for(bound - 1);
        std::uint64_t value;
        do {
            value = next() & mask;
        } while (value >= bound);
        return value;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    /// Stream for replica r of a run seeded with `seed`.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t replica) {
        std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (replica + 1);
        return split_mix(x);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    static std::uint64_t split_mix(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static std::uint64_t mask_for(std::uint64_t max) {
        std::uint64_t mask = max;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        return mask;
    }

    std::uint64_t state_[4];
};

} // namespace trichain
