#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>

namespace hydro {

/// SplitMix64 stream, used to expand a single integer seed into generator state.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/**
 * xoshiro256++ generator, seeded from a 64-bit integer via SplitMix64.
 * Identical seeds yield identical output streams on every platform.
 */
class Xoshiro256PlusPlus {
public:
    explicit Xoshiro256PlusPlus(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next() {
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

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

/**
 * Deterministic random source for the toolkit: uniform doubles from
 * xoshiro256++ and standard normals via Box-Muller. Single-owner; clone by
 * value only before first use if independent streams are needed.
 */
class Rng {
public:
    static constexpr std::uint64_t kDefaultSeed = 9001;

    explicit Rng(std::uint64_t seed = kDefaultSeed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1]; never zero, safe as a log argument.
    double uniform_open() {
        return static_cast<double>((gen_.next() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform in [-limit, limit].
    double uniform_symmetric(double limit) {
        return limit * (2.0 * uniform() - 1.0);
    }

    /// Standard normal via Box-Muller; pairs are generated and cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::uint64_t seed_;
    Xoshiro256PlusPlus gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace hydro
