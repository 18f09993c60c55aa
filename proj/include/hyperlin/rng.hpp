#pragma once

#include <cstdint>
#include <string_view>

namespace hyperlin {

// Counter-based splittable RNG (splitmix64 core). Module-level streams derive
// from a master seed plus a label string, so stages stay decorrelated and every
// stage is deterministic given (seed, label) regardless of call interleaving.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    // Derive an independent child stream for a named stage.
    SplitRng split(std::string_view label) const {
        std::uint64_t h = 1469598103934665603ULL; // FNV-1a
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
        return SplitRng(mix(state_ ^ h));
    }

    SplitRng split(std::uint64_t salt) const { return SplitRng(mix(state_ ^ mix(salt))); }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, bound), bound > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    bool next_bool() { return (next_u64() & 1ULL) != 0; }

    double next_double01() { return (next_u64() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace hyperlin
