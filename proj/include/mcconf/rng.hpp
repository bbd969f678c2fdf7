#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace mcconf {

// Deterministic uniform stream: xoshiro256++ seeded through SplitMix64.
// The algorithm is fixed (no std::mt19937, no platform distributions) so a
// given seed yields the same stream everywhere:
//
//   child_seed(m, i) : the (i+1)-th output of a SplitMix64 run started at m
//   state init       : four successive SplitMix64 outputs of the seed
//   next_u64()       : xoshiro256++ step
//   next_double()    : top 53 bits of next_u64, scaled to [0,1)
//
// Per-trial sources are RandomSource::child(master_seed, trial_index); they
// are statistically independent streams and reproducible regardless of the
// schedule that consumes them.
class RandomSource {
public:
    explicit RandomSource(uint64_t seed) : seed_(seed) {
        uint64_t st = seed;
        for (auto& w : s_) w = splitmix64_next(st);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9e3779b97f4a7c15ull;
    }

    static uint64_t child_seed(uint64_t master, uint64_t index) {
        uint64_t st = master + index * 0x9e3779b97f4a7c15ull;
        return splitmix64_next(st);
    }

    static RandomSource child(uint64_t master, uint64_t index) {
        return RandomSource(child_seed(master, index));
    }

    // Seed this source was constructed with; used to derive sub-streams.
    uint64_t seed() const { return seed_; }

    uint64_t next_u64() {
        const uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = std::rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0,1), 53 random mantissa bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static uint64_t splitmix64_next(uint64_t& state) {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t seed_;
    std::array<uint64_t, 4> s_;
};

}  // namespace mcconf
