#pragma once

#include <array>
#include <cstdint>

namespace fixedstart {

/// splitmix64 finalizer. Bijective avalanche mix on 64-bit words; the basis of
/// seeding and of stream derivation.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Stream-derivation rule used everywhere a trial needs its own generator:
///   child_seed = mix64(mix64(mix64(master) ^ a) ^ b)
/// with a = cell index and b = trial index in the experiment grid. Distinct
/// (master, a, b) tuples give decorrelated streams independent of scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b = 0) noexcept {
    return mix64(mix64(mix64(master) ^ a) ^ b);
}

/// xoshiro256++ generator, seeded through splitmix64. Single-owner: one Rng
/// per trial, never shared.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t z = seed;
        for (auto& s : state_) {
            z += 0x9e3779b97f4a7c15ull;
            std::uint64_t t = z;
            t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ull;
            t = (t ^ (t >> 27)) * 0x94d049bb133111ebull;
            s = t ^ (t >> 31);
        }
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double next_unit_pos() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    bool next_bernoulli(double p) noexcept { return next_unit() < p; }

    /// Unbiased uniform integer in [0, bound); bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        // Lemire's nearly-divisionless rejection method.
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

}  // namespace fixedstart
