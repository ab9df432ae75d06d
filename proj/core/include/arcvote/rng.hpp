#pragma once

#include <cstdint>

namespace arcvote {

// SplitMix64 (Steele/Lea/Flood). Used for seeding and trial-seed derivation.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ (Blackman & Vigna), state seeded through SplitMix64.
// Self-contained so that streams are identical across platforms and
// standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0,1), 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    int bernoulli(double p) { return uniform01() < p ? 1 : 0; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

// Fixed trial-seed derivation: trial i of a run with master seed m uses
// splitmix64(m + (i+1) * 0x9E3779B97F4A7C15).  Keeping this a documented,
// stable function lets parallel trials reproduce bit-for-bit.
inline std::uint64_t derive_trial_seed(std::uint64_t master, std::uint64_t trial) {
    SplitMix64 sm{master + (trial + 1) * 0x9E3779B97F4A7C15ULL};
    return sm.next();
}

}  // namespace arcvote
